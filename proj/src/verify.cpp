#include "verify.hpp"

#include <algorithm>
#include <sstream>

namespace qch {

namespace {

Int int_pow(const Int& base, unsigned long e) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
    return p;
}

std::string poly_in_x(const std::vector<Int>& b) {
    return UniPoly(std::vector<Int>(b.begin(), b.end())).str("x");
}

class Runner {
public:
    Runner(const Arrangement& a, long long qmax, const Limits& limits)
        : arr_(a), qmax_(qmax), limits_(limits) {}

    VerifyReport run();

private:
    void add(const std::string& name, bool pass, const std::string& detail) {
        report_.checks.push_back({name, pass ? "pass" : "fail", detail});
    }
    void skip(const std::string& name, const std::string& why) {
        report_.checks.push_back({name, "skip", why});
    }
    bool within_enumeration(const Ideal& ideal) const {
        return int_pow(ideal.norm(), arr_.space_rank()) <= to_int(limits_.max_enumeration);
    }

    std::vector<Ideal> test_ideals() const;
    void check_annihilator_fast_path();
    void check_counting(const std::vector<Ideal>& ideals);
    void check_gcd_property();
    void check_identities(const std::vector<Ideal>& ideals);
    void check_layers();
    void check_greene();

    const Arrangement& arr_;
    long long qmax_;
    Limits limits_;
    VerifyReport report_;

    std::optional<Ideal> rho_;
    std::optional<QuasiPolynomial> charqp_;
    std::optional<CoboundaryResult> cob_;
    std::optional<LayerPoset> poset_;
    std::string poset_failure_;
};

std::vector<Ideal> Runner::test_ideals() const {
    std::vector<Ideal> out;
    if (arr_.ring().degree() == 1) {
        for (long long q = 1; q <= qmax_; ++q)
            out.push_back(Ideal::principal_integer(arr_.ring(), to_int(q)));
    } else {
        out = ideals_with_norm_up_to(arr_.ring(), qmax_);
        for (const Ideal& kappa : divisors(*rho_, limits_.max_divisor_norm))
            if (std::find(out.begin(), out.end(), kappa) == out.end()) out.push_back(kappa);
    }
    return out;
}

void Runner::check_annihilator_fast_path() {
    if (arr_.ring().degree() != 1) {
        skip("annihilator-fast-path", "elementary-divisor shortcut applies over Z only");
        return;
    }
    if (arr_.size() == 0) {
        skip("annihilator-fast-path", "no nonempty subsets");
        return;
    }
    int checked = 0;
    for (uint32_t mask = 1; mask <= arr_.full_mask(); ++mask) {
        Ideal fast = cokernel_torsion_annihilator(arr_, mask);
        Ideal general = cokernel_torsion_annihilator_general(arr_, mask);
        if (fast != general) {
            std::ostringstream os;
            os << "subset mask " << mask << ": " << fast.str() << " vs " << general.str();
            add("annihilator-fast-path", false, os.str());
            return;
        }
        ++checked;
    }
    add("annihilator-fast-path", true, std::to_string(checked) + " subsets agree");
}

void Runner::check_counting(const std::vector<Ideal>& ideals) {
    int agreements = 0, totals = 0, chars = 0;
    for (const Ideal& ideal : ideals) {
        std::vector<Int> by_subsets = coboundary_counts(arr_, ideal, limits_);
        Int total = 0;
        for (const Int& b : by_subsets) total += b;
        if (total != int_pow(ideal.norm(), arr_.space_rank())) {
            add("b-counts-total", false, "sum of B_i differs from N^rank at " + ideal.str());
            return;
        }
        ++totals;
        if (within_enumeration(ideal)) {
            std::vector<Int> brute = coboundary_counts_brute(arr_, ideal, limits_);
            if (brute != by_subsets) {
                add("b-counts-agreement", false,
                    "B by enumeration " + poly_in_x(brute) + " vs by subsets " +
                        poly_in_x(by_subsets) + " at " + ideal.str());
                return;
            }
            ++agreements;
            Int complement = characteristic_brute(arr_, ideal, limits_);
            if (by_subsets[0] != complement || characteristic_by_counting(arr_, ideal) != complement) {
                add("characteristic-agreement", false, "mismatch at " + ideal.str());
                return;
            }
            ++chars;
        }
    }
    add("b-counts-agreement", true, std::to_string(agreements) + " ideals, enumeration vs subsets");
    add("b-counts-total", true, std::to_string(totals) + " ideals conserve the total count");
    add("characteristic-agreement", true, std::to_string(chars) + " ideals, three routes agree");

    int evals = 0;
    for (const Ideal& ideal : ideals) {
        Int expected = characteristic_by_counting(arr_, ideal);
        if ((*charqp_)(ideal) != expected) {
            add("quasi-evaluation", false, "characteristic constituent wrong at " + ideal.str());
            return;
        }
        std::vector<Int> b = coboundary_counts(arr_, ideal, limits_);
        UniPoly in_x = cob_->quasi(ideal);
        for (int i = 0; i <= arr_.class_count(); ++i)
            if (in_x.coeff(i) != b[i]) {
                add("quasi-evaluation", false, "coboundary constituent wrong at " + ideal.str());
                return;
            }
        const Ideal kappa = ideal.sum(*rho_);
        for (int i = 0; i <= arr_.class_count(); ++i)
            if (cob_->b_constituents.at(kappa)[i](ideal.norm()) != b[i]) {
                add("quasi-evaluation", false, "B_i constituent wrong at " + ideal.str());
                return;
            }
        ++evals;
    }
    add("quasi-evaluation", true, std::to_string(evals) + " ideals match their constituents");

    int x0 = 0;
    for (const auto& [kappa, chi_bar] : cob_->quasi.constituents) {
        if (chi_bar.coefficient_of_second(0) != charqp_->constituents.at(kappa)) {
            add("coboundary-at-x0", false, "divisor " + kappa.str());
            return;
        }
        ++x0;
    }
    add("coboundary-at-x0", true, std::to_string(x0) + " divisors specialize correctly");
}

void Runner::check_gcd_property() {
    if (arr_.ring().degree() != 1) {
        skip("gcd-property", "stated for integer arrangements");
        return;
    }
    Int rho_norm = rho_->norm();
    int checked = 0;
    for (Int q = 1; q <= 3 * rho_norm; ++q) {
        Int g;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), rho_norm.get_mpz_t());
        Ideal ideal = Ideal::principal_integer(arr_.ring(), q);
        Ideal kappa = Ideal::principal_integer(arr_.ring(), g);
        Int expected = characteristic_by_counting(arr_, ideal);
        if (charqp_->constituents.at(kappa)(q) != expected) {
            add("gcd-property", false, "q=" + q.get_str());
            return;
        }
        ++checked;
    }
    add("gcd-property", true, std::to_string(checked) + " moduli follow the gcd constituent");
}

void Runner::check_identities(const std::vector<Ideal>& ideals) {
    std::string detail;
    if (!tutte_coboundary_identity_holds(arr_, limits_, &detail)) {
        add("tutte-coboundary-identity", false, detail);
    } else {
        add("tutte-coboundary-identity", true,
            "T = " + tutte_polynomial(arr_, limits_).str("x", "y"));
    }

    int kw = 0, mw = 0;
    for (const Ideal& ideal : ideals) {
        if (!within_enumeration(ideal)) continue;
        std::string why;
        if (!kernel_weight_identity_holds(arr_, ideal, limits_, &why)) {
            add("kernel-weight-identity", false, why + " at " + ideal.str());
            return;
        }
        ++kw;
        if (arr_.size() > 0 &&
            int_pow(ideal.norm(), arr_.size()) <= to_int(limits_.max_enumeration)) {
            Code image = image_code(arr_, ideal, limits_);
            if (!macwilliams_identity_holds(image, limits_, &why)) {
                add("macwilliams", false, why + " at " + ideal.str());
                return;
            }
            ++mw;
        }
    }
    add("kernel-weight-identity", true, std::to_string(kw) + " ideals");
    if (mw == 0)
        skip("macwilliams", "no test ideal within the duality enumeration bound");
    else
        add("macwilliams", true, std::to_string(mw) + " image codes");
}

void Runner::check_layers() {
    if (!poset_) {
        skip("poset-constituents", "layer poset unavailable: " + poset_failure_);
        return;
    }
    const LayerPoset& poset = *poset_;
    std::vector<Ideal> divs = divisors(*rho_, limits_.max_divisor_norm);

    bool ok = true;
    for (const Ideal& kappa : divs)
        if (poset.poset_constituent(kappa) != cob_->quasi.constituents.at(kappa)) {
            add("poset-constituents", false, "divisor " + kappa.str());
            ok = false;
            break;
        }
    if (ok)
        add("poset-constituents", true,
            std::to_string(divs.size()) + " divisors match the interpolated constituents");

    ok = true;
    for (const Ideal& kappa : divs)
        if (poset.poset_characteristic(kappa) != charqp_->constituents.at(kappa)) {
            add("poset-characteristic", false, "divisor " + kappa.str());
            ok = false;
            break;
        }
    if (ok) add("poset-characteristic", true, std::to_string(divs.size()) + " divisors match");

    // Torsion membership: the generator-wise module test against existence
    // of a kappa-torsion point inside the layer.
    ok = true;
    for (const Ideal& kappa : divs) {
        std::vector<char> members = poset.torsion_members(kappa);
        for (int z = 0; z < poset.size() && ok; ++z) {
            bool found = false;
            for (int k = 0; k < poset.point_count() && !found; ++k)
                found = poset.point_is_torsion(k, kappa) && poset.point_in_layer(k, z);
            if (found != static_cast<bool>(members[z])) {
                add("torsion-membership", false,
                    "layer " + std::to_string(z) + ", divisor " + kappa.str());
                ok = false;
            }
        }
    }
    if (ok) add("torsion-membership", true, "module test equals point test on every layer");

    ok = true;
    for (const Ideal& kappa : divs) {
        std::vector<char> members = poset.torsion_members(kappa);
        for (int z = 0; z < poset.size() && ok; ++z) {
            if (!members[z]) continue;
            Int count = 0;
            for (int k = 0; k < poset.point_count(); ++k)
                if (poset.point_is_torsion(k, kappa) && poset.point_in_layer(k, z)) ++count;
            if (count != int_pow(kappa.norm(), poset.layer(z).dim)) {
                add("torsion-cardinality", false,
                    "layer " + std::to_string(z) + ", divisor " + kappa.str());
                ok = false;
            }
        }
    }
    if (ok) add("torsion-cardinality", true, "#Z[kappa] = N(kappa)^dim on every torsion layer");

    // Partition into minimal layers, and the Mobius complement counts.
    ok = true;
    std::vector<Int> owned(poset.size(), Int(0));
    for (int k = 0; k < poset.point_count() && ok; ++k) {
        int z = poset.minimal_layer_of_point(k);
        owned[z] += 1;
    }
    for (const Ideal& kappa : divs) {
        if (!ok) break;
        std::vector<char> members = poset.torsion_members(kappa);
        for (int z = 0; z < poset.size() && ok; ++z) {
            if (!members[z]) continue;
            Int enumerated = 0;
            for (int k = 0; k < poset.point_count(); ++k)
                if (poset.point_is_torsion(k, kappa) && poset.minimal_layer_of_point(k) == z)
                    ++enumerated;
            if (enumerated != poset.complement_count(z, kappa)) {
                add("complement-counts", false,
                    "layer " + std::to_string(z) + ", divisor " + kappa.str());
                ok = false;
            }
        }
    }
    if (ok) {
        Int total = 0;
        for (const Int& c : owned) total += c;
        if (total != Int(poset.point_count())) {
            add("complement-counts", false, "minimal layers do not partition the points");
        } else {
            add("complement-counts", true, "Mobius sums equal enumerated complements");
        }
    }

    ok = true;
    for (int z = 0; z < poset.size() && ok; ++z)
        for (int k = 0; k < poset.point_count() && ok; ++k) {
            if (!poset.point_in_layer(k, z)) continue;
            int bound = arr_.class_count() - poset.point_weight(k);
            int a_z = poset.layer(z).atom_count;
            bool in_complement = poset.minimal_layer_of_point(k) == z;
            if (a_z > bound || (a_z == bound) != in_complement) {
                add("atom-weight", false,
                    "layer " + std::to_string(z) + ", point " + poset.point_str(poset.point(k)));
                ok = false;
            }
        }
    if (ok) add("atom-weight", true, "a(Z) matches p(A) - wt on complements, bounds elsewhere");

    ok = true;
    for (int i = 0; i < arr_.size() && ok; ++i)
        for (int j = i + 1; j < arr_.size() && ok; ++j) {
            bool share = false;
            uint32_t need = (1u << i) | (1u << j);
            for (int z = 0; z < poset.size() && !share; ++z) {
                const Layer& layer = poset.layer(z);
                share = layer.flat == arr_.closure(1u << i) && layer.flat == arr_.closure(1u << j) &&
                        (layer.defining_subset & need) == need;
            }
            if (share != arr_.parallel(i, j)) {
                add("sharing-layer-parallel", false,
                    "vectors " + std::to_string(i) + "," + std::to_string(j));
                ok = false;
            }
        }
    if (ok) add("sharing-layer-parallel", true, "shared layers occur exactly for parallel vectors");

    // Poset sanity: recursive Mobius sums vanish on proper intervals.
    ok = true;
    for (int i = 0; i < poset.size() && ok; ++i)
        for (int j = 0; j < poset.size() && ok; ++j) {
            if (i == j || !poset.leq(i, j)) continue;
            Int sum = 0;
            for (int k = 0; k < poset.size(); ++k)
                if (poset.leq(i, k) && poset.leq(k, j)) sum += poset.mobius(i, k);
            if (sum != 0) {
                add("mobius-recursion", false,
                    "interval " + std::to_string(i) + ".." + std::to_string(j));
                ok = false;
            }
        }
    if (ok) add("mobius-recursion", true, "Mobius sums vanish on proper intervals");
}

void Runner::check_greene() {
    if (arr_.ring().degree() != 1) {
        skip("greene", "checked for integer arrangements only");
        return;
    }
    int checked = 0;
    std::vector<std::string> reasons;
    for (long p : {3L, 5L, 7L}) {
        Int pz(p);
        std::string tag = "p=" + std::to_string(p);
        bool zero_col = false, proportional = false;
        for (int c = 0; c < arr_.size() && !zero_col; ++c) {
            bool all_zero = true;
            for (int i = 0; i < arr_.space_rank(); ++i)
                if (arr_.column(c)[i].a() % pz != 0) all_zero = false;
            zero_col = all_zero;
        }
        for (int i = 0; i < arr_.size() && !zero_col && !proportional; ++i)
            for (int j = i + 1; j < arr_.size() && !proportional; ++j) {
                bool rank_le_1 = true;
                for (int r = 0; r < arr_.space_rank() && rank_le_1; ++r)
                    for (int s = r + 1; s < arr_.space_rank() && rank_le_1; ++s) {
                        Int minor = arr_.column(i)[r].a() * arr_.column(j)[s].a() -
                                    arr_.column(i)[s].a() * arr_.column(j)[r].a();
                        if (minor % pz != 0) rank_le_1 = false;
                    }
                proportional = rank_le_1;
            }
        if (zero_col) {
            reasons.push_back(tag + ": a column vanishes mod p");
            continue;
        }
        if (proportional && arr_.size() > 1) {
            reasons.push_back(tag + ": columns become proportional mod p");
            continue;
        }
        Ideal ideal = Ideal::principal_integer(arr_.ring(), pz);
        if (count_H(arr_, arr_.full_mask(), ideal) != 1) {
            reasons.push_back(tag + ": reduction is not injective");
            continue;
        }
        if (!within_enumeration(ideal)) {
            reasons.push_back(tag + ": image code out of enumeration bounds");
            continue;
        }
        UniPoly chi_bar_at_p = cob_->quasi(ideal);
        Code code = image_code(arr_, ideal, limits_);
        BiPoly w = hamming_weight_enumerator(code);
        std::vector<Int> coeffs(arr_.size() + 1, Int(0));
        for (const auto& [key, c] : w.terms()) coeffs[key.first] += c;
        if (chi_bar_at_p != UniPoly(std::move(coeffs))) {
            add("greene", false, tag + ": coboundary evaluation differs from W(x,1)");
            return;
        }
        ++checked;
    }
    if (checked == 0) {
        std::string why;
        for (const auto& r : reasons) why += (why.empty() ? "" : "; ") + r;
        skip("greene", why.empty() ? "no prime applicable" : why);
        return;
    }
    std::string detail = std::to_string(checked) + " primes";
    for (const auto& r : reasons) detail += "; skipped " + r;
    add("greene", true, detail);
}

VerifyReport Runner::run() {
    rho_ = lcm_period(arr_, limits_);
    charqp_ = characteristic_quasi_polynomial(arr_, limits_);
    cob_ = coboundary_quasi_polynomial(arr_, limits_);
    try {
        poset_ = LayerPoset::build(arr_, limits_);
    } catch (const resource_error& err) {
        poset_failure_ = err.what();
    }
    std::vector<Ideal> ideals = test_ideals();
    check_annihilator_fast_path();
    check_counting(ideals);
    check_gcd_property();
    check_identities(ideals);
    check_layers();
    check_greene();
    return report_;
}

}  // namespace

int VerifyReport::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == "pass";
    return n;
}

int VerifyReport::failed() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == "fail";
    return n;
}

int VerifyReport::skipped() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == "skip";
    return n;
}

VerifyReport run_verification(const Arrangement& a, long long qmax, const Limits& limits) {
    return Runner(a, qmax, limits).run();
}

}  // namespace qch
