// Command-line front end; all computation goes through the shared C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include "quasichar.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;
constexpr int kExitInternalError = 4;

int exit_code(qch_status status) {
    switch (status) {
        case QCH_OK: return 0;
        case QCH_VERIFY_FAILED: return kExitVerifyFailed;
        case QCH_INVALID_INPUT: return kExitInputError;
        case QCH_RESOURCE_LIMIT: return kExitResourceLimit;
        default: return kExitInternalError;
    }
}

uint64_t fnv1a(const std::string& data, uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

struct Failure {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kExitInputError, "cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    bool no_cache = false;
    qch_limits limits{};
    std::string cache_dir;
};

std::string cache_directory() {
    const char* env = std::getenv("QUASICHAR_CACHE_DIR");
    return env && *env ? env : ".quasichar-cache";
}

class Cache {
public:
    Cache(const Options& opts, const std::string& key_material)
        : enabled_(!opts.no_cache), path_(opts.cache_dir + "/" + hex64(fnv1a(key_material)) + ".json") {
        if (enabled_) {
            std::error_code ec;
            std::filesystem::create_directories(opts.cache_dir, ec);
            if (ec || !std::filesystem::is_directory(opts.cache_dir)) {
                std::cerr << "warning: cache directory unavailable, caching disabled\n";
                enabled_ = false;
            }
        }
    }

    std::optional<std::string> lookup() const {
        if (!enabled_) return std::nullopt;
        std::ifstream in(path_, std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    void store(const std::string& document) const {
        if (!enabled_) return;
        std::string tmp = path_ + ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) {
                std::cerr << "warning: cache not writable, skipping store\n";
                return;
            }
            out << document;
        }
        if (std::rename(tmp.c_str(), path_.c_str()) != 0) {
            std::remove(tmp.c_str());
            std::cerr << "warning: cache not writable, skipping store\n";
        }
    }

private:
    bool enabled_;
    std::string path_;
};

// Owns strings handed out by the C API.
struct ApiString {
    char* value = nullptr;
    ApiString() = default;
    ApiString(const ApiString&) = delete;
    ApiString& operator=(const ApiString&) = delete;
    ~ApiString() { qch_string_free(value); }
};

struct ArrangementHandle {
    qch_arrangement* value = nullptr;
    ArrangementHandle() = default;
    ArrangementHandle(ArrangementHandle&& other) noexcept : value(other.value) {
        other.value = nullptr;
    }
    ArrangementHandle& operator=(ArrangementHandle&& other) noexcept {
        std::swap(value, other.value);
        return *this;
    }
    ArrangementHandle(const ArrangementHandle&) = delete;
    ArrangementHandle& operator=(const ArrangementHandle&) = delete;
    ~ArrangementHandle() { qch_arrangement_free(value); }
};

void check(qch_status status) {
    if (status != QCH_OK) throw Failure{exit_code(status), qch_last_error()};
}

ArrangementHandle load_arrangement(const std::string& file_text) {
    ArrangementHandle handle;
    check(qch_arrangement_parse(file_text.c_str(), &handle.value));
    return handle;
}

int emit(const Options& opts, const std::string& command, const std::string& key_material,
         const std::string& input_text,
         const std::function<Json()>& compute,
         const std::function<int(const Json&)>& exit_from = {},
         const std::function<void(const Json&)>& postprocess = {}) {
    Cache cache(opts, key_material);
    if (auto hit = cache.lookup()) {
        std::cerr << "cache: hit\n";
        std::cout << *hit;
        if (exit_from || postprocess) {
            Json doc = Json::parse(*hit);
            if (postprocess) postprocess(doc);
            if (exit_from) return exit_from(doc);
        }
        return 0;
    }
    auto start = std::chrono::steady_clock::now();
    Json result = compute();
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    Json wrapper;
    wrapper["command"] = command;
    wrapper["input_hash"] = "fnv1a:" + hex64(fnv1a(input_text));
    wrapper["result"] = result.contains("__result") ? result["__result"] : result;
    if (result.contains("__dot")) wrapper["dot"] = result["__dot"];
    wrapper["timing"] = Json{{"elapsed_ms", elapsed.count()}};
    std::string text = wrapper.dump(2) + "\n";
    cache.store(text);
    std::cout << text;
    if (postprocess) postprocess(wrapper);
    if (exit_from) return exit_from(wrapper);
    return 0;
}

Json parse_api_json(const char* text) { return Json::parse(text); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasichar: exact characteristic/coboundary quasi-polynomials, layer posets,\n"
                 "Tutte polynomials and weight enumerators for central arrangements over Z or a\n"
                 "quadratic ring of integers"};
    app.require_subcommand(1);

    Options opts;
    qch_limits_default(&opts.limits);
    opts.cache_dir = cache_directory();
    app.add_flag("--no-cache", opts.no_cache, "Recompute even when a cached document exists");
    app.add_option("--max-points", opts.limits.max_enumeration,
                   "Brute-force enumeration bound (points)");
    app.add_option("--max-vectors", opts.limits.max_vectors, "Subset-expansion bound on #vectors");
    app.add_option("--max-divisor-norm", opts.limits.max_divisor_norm,
                   "Divisor enumeration bound on N(rho)");

    std::string file, ideal_spec, dot_path, codes_mode;
    long long qmax = 12;

    CLI::App* charpoly = app.add_subcommand("charpoly", "Characteristic quasi-polynomial of FILE");
    charpoly->add_option("file", file, "arrangement file")->required();

    CLI::App* coboundary = app.add_subcommand("coboundary", "Coboundary quasi-polynomial of FILE");
    coboundary->add_option("file", file, "arrangement file")->required();

    CLI::App* layers = app.add_subcommand("layers", "Poset of layers of FILE");
    layers->add_option("file", file, "arrangement file")->required();
    layers->add_option("--dot", dot_path, "also write the Hasse diagram as DOT");

    CLI::App* tutte = app.add_subcommand("tutte", "Tutte polynomial of FILE");
    tutte->add_option("file", file, "arrangement file")->required();

    CLI::App* codes = app.add_subcommand("codes", "Weight enumerators / dual / MacWilliams");
    codes->add_option("file", file, "arrangement file")->required();
    codes->add_option("--ideal", ideal_spec, "ideal spec (integer or generator list)")->required();
    codes->add_option("mode", codes_mode, "weight | dual | macwilliams")->required();

    CLI::App* eval = app.add_subcommand("eval", "Evaluate the quasi-polynomials at an ideal");
    eval->add_option("file", file, "arrangement file")->required();
    eval->add_option("--ideal", ideal_spec, "ideal spec (integer or generator list)")->required();

    CLI::App* verify = app.add_subcommand("verify", "Run the full invariant suite on FILE");
    verify->add_option("file", file, "arrangement file")->required();
    verify->add_option("--qmax", qmax, "largest test norm (default 12)");

    app.add_subcommand("section4", "Fixed dual-code experiment over Z/q, q = 2..12");

    for (CLI::App* sub : app.get_subcommands({})) {
        sub->ignore_case();
        sub->fallthrough();  // global flags may follow the subcommand
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    std::ostringstream key;
    key << app.get_subcommands().front()->get_name() << '\0' << ideal_spec << '\0' << codes_mode
        << '\0' << qmax << '\0' << (dot_path.empty() ? "" : "dot") << '\0'
        << opts.limits.max_enumeration << '\0' << opts.limits.max_vectors << '\0'
        << opts.limits.max_divisor_norm << '\0';

    try {
        std::string input_text;
        std::optional<ArrangementHandle> arrangement;
        if (!file.empty()) {
            input_text = read_file(file);
            key << input_text;
            arrangement.emplace(load_arrangement(input_text));
        }
        const std::string command = app.get_subcommands().front()->get_name();
        auto run_simple = [&](qch_status (*fn)(const qch_arrangement*, const qch_limits*, char**)) {
            return emit(opts, command, key.str(), input_text, [&] {
                ApiString out;
                check(fn(arrangement->value, &opts.limits, &out.value));
                return parse_api_json(out.value);
            });
        };
        if (charpoly->parsed()) return run_simple(qch_charpoly);
        if (coboundary->parsed()) return run_simple(qch_coboundary);
        if (tutte->parsed()) return run_simple(qch_tutte);
        if (layers->parsed()) {
            return emit(
                opts, command, key.str(), input_text,
                [&] {
                    ApiString doc;
                    check(qch_layers(arrangement->value, &opts.limits, &doc.value));
                    Json bundle;
                    bundle["__result"] = parse_api_json(doc.value);
                    if (!dot_path.empty()) {
                        ApiString dot;
                        check(qch_layers_dot(arrangement->value, &opts.limits, &dot.value));
                        bundle["__dot"] = std::string(dot.value);
                    }
                    return bundle;
                },
                {},
                [&](const Json& wrapper) {
                    if (dot_path.empty() || !wrapper.contains("dot")) return;
                    std::ofstream out(dot_path, std::ios::binary);
                    if (!out) throw Failure{kExitInputError, "cannot write '" + dot_path + "'"};
                    out << wrapper["dot"].get<std::string>();
                });
        }
        if (codes->parsed()) {
            return emit(opts, command, key.str(), input_text, [&] {
                ApiString out;
                check(qch_codes(arrangement->value, ideal_spec.c_str(), codes_mode.c_str(),
                                &opts.limits, &out.value));
                return parse_api_json(out.value);
            });
        }
        if (eval->parsed()) {
            return emit(opts, command, key.str(), input_text, [&] {
                ApiString out;
                check(qch_eval(arrangement->value, ideal_spec.c_str(), &opts.limits, &out.value));
                return parse_api_json(out.value);
            });
        }
        if (verify->parsed()) {
            return emit(
                opts, command, key.str(), input_text,
                [&] {
                    ApiString out;
                    qch_status status =
                        qch_verify(arrangement->value, qmax, &opts.limits, &out.value);
                    if (status != QCH_OK && status != QCH_VERIFY_FAILED)
                        throw Failure{exit_code(status), qch_last_error()};
                    return parse_api_json(out.value);
                },
                [](const Json& wrapper) {
                    return wrapper["result"]["failed"].get<int>() > 0 ? kExitVerifyFailed : 0;
                });
        }
        // section4
        return emit(opts, command, key.str(), input_text, [&] {
            ApiString out;
            check(qch_section4(&opts.limits, &out.value));
            return parse_api_json(out.value);
        });
    } catch (const Failure& failure) {
        std::cerr << "error: " << failure.message << "\n";
        return failure.code;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInternalError;
    }
}
