#include "quasichar.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "documents.hpp"

using namespace qch;

struct qch_arrangement {
    Arrangement value;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Limits to_limits(const qch_limits* limits) {
    Limits out;
    if (limits) {
        out.max_enumeration = limits->max_enumeration;
        out.max_vectors = limits->max_vectors;
        out.max_divisor_norm = limits->max_divisor_norm;
    }
    return out;
}

template <typename Fn>
qch_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const input_error& err) {
        last_error = err.what();
        return QCH_INVALID_INPUT;
    } catch (const resource_error& err) {
        last_error = err.what();
        return QCH_RESOURCE_LIMIT;
    } catch (const std::exception& err) {
        last_error = err.what();
        return QCH_INTERNAL_ERROR;
    }
}

qch_status emit(const Json& doc, char** out_json) {
    *out_json = dup_string(doc.dump(2) + "\n");
    return *out_json ? QCH_OK : QCH_INTERNAL_ERROR;
}

}  // namespace

extern "C" {

void qch_limits_default(qch_limits* out) {
    if (!out) return;
    Limits defaults;
    out->max_enumeration = defaults.max_enumeration;
    out->max_vectors = defaults.max_vectors;
    out->max_divisor_norm = defaults.max_divisor_norm;
}

qch_status qch_arrangement_parse(const char* json_text, qch_arrangement** out) {
    if (!json_text || !out) {
        last_error = "null argument";
        return QCH_INVALID_INPUT;
    }
    return guarded([&] {
        *out = new qch_arrangement{parse_arrangement(json_text)};
        return QCH_OK;
    });
}

void qch_arrangement_free(qch_arrangement* arrangement) { delete arrangement; }

qch_status qch_arrangement_canonical_json(const qch_arrangement* arrangement, char** out_json) {
    if (!arrangement || !out_json) {
        last_error = "null argument";
        return QCH_INVALID_INPUT;
    }
    return guarded([&] { return emit(arrangement_json(arrangement->value), out_json); });
}

#define QCH_DOCUMENT_ENTRY(name, builder)                                                     \
    qch_status name(const qch_arrangement* arrangement, const qch_limits* limits,             \
                    char** out_json) {                                                        \
        if (!arrangement || !out_json) {                                                      \
            last_error = "null argument";                                                     \
            return QCH_INVALID_INPUT;                                                         \
        }                                                                                     \
        return guarded(                                                                       \
            [&] { return emit(builder(arrangement->value, to_limits(limits)), out_json); });  \
    }

QCH_DOCUMENT_ENTRY(qch_charpoly, charpoly_document)
QCH_DOCUMENT_ENTRY(qch_coboundary, coboundary_document)
QCH_DOCUMENT_ENTRY(qch_layers, layers_document)
QCH_DOCUMENT_ENTRY(qch_tutte, tutte_document)

#undef QCH_DOCUMENT_ENTRY

qch_status qch_layers_dot(const qch_arrangement* arrangement, const qch_limits* limits,
                          char** out_dot) {
    if (!arrangement || !out_dot) {
        last_error = "null argument";
        return QCH_INVALID_INPUT;
    }
    return guarded([&] {
        *out_dot = dup_string(layers_dot(arrangement->value, to_limits(limits)));
        return *out_dot ? QCH_OK : QCH_INTERNAL_ERROR;
    });
}

qch_status qch_eval(const qch_arrangement* arrangement, const char* ideal_spec,
                    const qch_limits* limits, char** out_json) {
    if (!arrangement || !ideal_spec || !out_json) {
        last_error = "null argument";
        return QCH_INVALID_INPUT;
    }
    return guarded([&] {
        Ideal ideal = parse_ideal_spec(arrangement->value.ring(), ideal_spec);
        return emit(eval_document(arrangement->value, ideal, to_limits(limits)), out_json);
    });
}

qch_status qch_codes(const qch_arrangement* arrangement, const char* ideal_spec, const char* mode,
                     const qch_limits* limits, char** out_json) {
    if (!arrangement || !ideal_spec || !mode || !out_json) {
        last_error = "null argument";
        return QCH_INVALID_INPUT;
    }
    return guarded([&] {
        Ideal ideal = parse_ideal_spec(arrangement->value.ring(), ideal_spec);
        return emit(codes_document(arrangement->value, ideal, mode, to_limits(limits)), out_json);
    });
}

qch_status qch_verify(const qch_arrangement* arrangement, long long qmax,
                      const qch_limits* limits, char** out_json) {
    if (!arrangement || !out_json) {
        last_error = "null argument";
        return QCH_INVALID_INPUT;
    }
    return guarded([&] {
        bool all_passed = false;
        Json doc = verify_document(arrangement->value, qmax, to_limits(limits), &all_passed);
        qch_status status = emit(doc, out_json);
        if (status != QCH_OK) return status;
        if (!all_passed) {
            last_error = "verification failed";
            return QCH_VERIFY_FAILED;
        }
        return QCH_OK;
    });
}

qch_status qch_section4(const qch_limits* limits, char** out_json) {
    if (!out_json) {
        last_error = "null argument";
        return QCH_INVALID_INPUT;
    }
    return guarded([&] { return emit(section4_document(to_limits(limits)), out_json); });
}

const char* qch_last_error(void) { return last_error.c_str(); }

void qch_string_free(char* text) { std::free(text); }

}  // extern "C"
