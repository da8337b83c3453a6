#include "documents.hpp"

namespace qch {

namespace {

Json arrangement_header(const Arrangement& a) {
    Json out;
    if (!a.name().empty()) out["name"] = a.name();
    out["ring"] = ring_json(a.ring());
    out["rank"] = a.space_rank();
    out["vectors"] = a.size();
    out["parallel_classes"] = a.class_count();
    return out;
}

Json constituents_json(const std::map<Ideal, UniPoly>& constituents) {
    Json out;
    for (const auto& [kappa, poly] : constituents) out[kappa.str()] = unipoly_json(poly);
    return out;
}

Json constituents_json(const std::map<Ideal, BiPoly>& constituents) {
    Json out;
    for (const auto& [kappa, poly] : constituents) out[kappa.str()] = bipoly_json(poly);
    return out;
}

}  // namespace

Json charpoly_document(const Arrangement& a, const Limits& limits) {
    QuasiPolynomial qp = characteristic_quasi_polynomial(a, limits);
    Json out;
    out["arrangement"] = arrangement_header(a);
    out["period"] = ideal_json(qp.period);
    out["constituents"] = constituents_json(qp.constituents);
    return out;
}

Json coboundary_document(const Arrangement& a, const Limits& limits) {
    CoboundaryResult cb = coboundary_quasi_polynomial(a, limits);
    Json out;
    out["arrangement"] = arrangement_header(a);
    out["period"] = ideal_json(cb.quasi.period);
    out["constituents"] = constituents_json(cb.quasi.constituents);
    Json b;
    for (const auto& [kappa, list] : cb.b_constituents) {
        Json per_divisor = Json::array();
        for (const UniPoly& bi : list) per_divisor.push_back(unipoly_json(bi));
        b[kappa.str()] = std::move(per_divisor);
    }
    out["b_constituents"] = std::move(b);
    return out;
}

Json layers_document(const Arrangement& a, const Limits& limits) {
    LayerPoset poset = LayerPoset::build(a, limits);
    Json out;
    out["arrangement"] = arrangement_header(a);
    out["period"] = ideal_json(poset.period());
    Json layers = Json::array();
    for (int i = 0; i < poset.size(); ++i) {
        const Layer& layer = poset.layer(i);
        Json entry;
        entry["index"] = i;
        entry["representative"] = poset.point_str(layer.rep);
        entry["dim"] = layer.dim;
        entry["atoms_below"] = layer.atom_count;
        Json subset = Json::array();
        for (int c = 0; c < a.size(); ++c)
            if (layer.defining_subset & (1u << c)) subset.push_back(c);
        entry["defining_subset"] = std::move(subset);
        layers.push_back(std::move(entry));
    }
    out["layers"] = std::move(layers);
    Json covers = Json::array();
    for (int i = 0; i < poset.size(); ++i)
        for (int j = 0; j < poset.size(); ++j) {
            if (i == j || !poset.leq(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < poset.size() && cover; ++k)
                if (k != i && k != j && poset.leq(i, k) && poset.leq(k, j)) cover = false;
            if (cover) covers.push_back(Json::array({i, j}));
        }
    out["covers"] = std::move(covers);
    Json torsion;
    Json poset_constituents;
    for (const Ideal& kappa : divisors(poset.period(), limits.max_divisor_norm)) {
        Json members = Json::array();
        std::vector<char> mask = poset.torsion_members(kappa);
        for (int i = 0; i < poset.size(); ++i)
            if (mask[i]) members.push_back(i);
        torsion[kappa.str()] = std::move(members);
        poset_constituents[kappa.str()] = bipoly_json(poset.poset_constituent(kappa));
    }
    out["torsion_subposets"] = std::move(torsion);
    out["poset_constituents"] = std::move(poset_constituents);
    return out;
}

std::string layers_dot(const Arrangement& a, const Limits& limits) {
    return LayerPoset::build(a, limits).dot();
}

Json tutte_document(const Arrangement& a, const Limits& limits) {
    Json out;
    out["arrangement"] = arrangement_header(a);
    out["tutte"] = bipoly_json(tutte_polynomial(a, limits), "x", "y");
    std::string detail;
    out["coboundary_identity"] = tutte_coboundary_identity_holds(a, limits, &detail);
    if (!detail.empty()) out["coboundary_identity_detail"] = detail;
    return out;
}

Json eval_document(const Arrangement& a, const Ideal& ideal, const Limits& limits) {
    Json out;
    out["arrangement"] = arrangement_header(a);
    out["ideal"] = ideal_json(ideal);
    QuasiPolynomial qp = characteristic_quasi_polynomial(a, limits);
    CoboundaryResult cb = coboundary_quasi_polynomial(a, limits);
    out["constituent_class"] = ideal_json(ideal.sum(qp.period));
    out["characteristic"] = qp(ideal).get_str();
    out["coboundary"] = unipoly_json(cb.quasi(ideal), "x");
    Int enumeration_size;
    mpz_pow_ui(enumeration_size.get_mpz_t(), ideal.norm().get_mpz_t(), a.space_rank());
    if (enumeration_size <= to_int(limits.max_enumeration)) {
        Int brute = characteristic_brute(a, ideal, limits);
        out["brute_force"] = brute.get_str();
        out["brute_force_matches"] = (brute == qp(ideal));
    }
    return out;
}

Json codes_document(const Arrangement& a, const Ideal& ideal, const std::string& mode,
                    const Limits& limits) {
    Json out;
    out["arrangement"] = arrangement_header(a);
    out["ideal"] = ideal_json(ideal);
    out["mode"] = mode;
    Code image = image_code(a, ideal, limits);
    out["code_size"] = std::to_string(image.size());
    if (mode == "weight") {
        out["hamming_enumerator"] = bipoly_json(hamming_weight_enumerator(image), "x", "y");
        out["class_enumerator"] =
            bipoly_json(class_weight_enumerator(image, a.parallel_classes()), "x", "y");
    } else if (mode == "dual") {
        Code dual = dual_code(image, limits);
        out["dual_size"] = std::to_string(dual.size());
        out["dual_enumerator"] = bipoly_json(hamming_weight_enumerator(dual), "x", "y");
        Json words = Json::array();
        if (dual.size() <= 4096) {
            for (const auto& word : dual.words()) {
                Json w = Json::array();
                for (const RingElement& x : word) w.push_back(x.str());
                words.push_back(std::move(w));
            }
            out["dual_words"] = std::move(words);
        }
    } else if (mode == "macwilliams") {
        std::string detail;
        out["macwilliams_holds"] = macwilliams_identity_holds(image, limits, &detail);
        if (!detail.empty()) out["macwilliams_detail"] = detail;
    } else {
        throw input_error("codes: unknown mode '" + mode + "' (weight|dual|macwilliams)");
    }
    return out;
}

Json verify_document(const Arrangement& a, long long qmax, const Limits& limits,
                     bool* all_passed) {
    VerifyReport report = run_verification(a, qmax, limits);
    Json out;
    out["arrangement"] = arrangement_header(a);
    out["qmax"] = qmax;
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
        Json entry;
        entry["name"] = c.name;
        entry["status"] = c.status;
        entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    out["checks"] = std::move(checks);
    out["passed"] = report.passed();
    out["failed"] = report.failed();
    out["skipped"] = report.skipped();
    if (all_passed) *all_passed = report.ok();
    return out;
}

Json section4_document(const Limits& limits) {
    Section4Report report = section4_dual_experiment(limits);
    Json out;
    out["experiment"] = "two-vector dual comparison over Z/q, q = 2..12";
    Json rows = Json::array();
    for (const Section4Row& row : report.rows) {
        Json entry;
        entry["q"] = row.q;
        entry["image_enumerator"] = row.image_enumerator;
        entry["dual_enumerator"] = row.dual_enumerator;
        entry["dual_matches_hom_construction"] = row.dual_matches_hom_construction;
        entry["macwilliams"] = row.macwilliams;
        rows.push_back(std::move(entry));
    }
    out["rows"] = std::move(rows);
    out["ok"] = report.ok;
    return out;
}

}  // namespace qch
