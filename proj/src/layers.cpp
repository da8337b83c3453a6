#include "layers.hpp"

#include <algorithm>
#include <sstream>

namespace qch {

namespace {

Int int_pow(const Int& base, unsigned long e) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
    return p;
}

std::vector<Int> multiply_row(const std::vector<Int>& v, const IntMatrix& m) {
    std::vector<Int> out(m.cols(), Int(0));
    for (int j = 0; j < m.cols(); ++j)
        for (size_t i = 0; i < v.size(); ++i) out[j] += v[i] * m.at(static_cast<int>(i), j);
    return out;
}

}  // namespace

LayerPoset LayerPoset::build(const Arrangement& a, const Limits& limits) {
    LayerPoset p(a);
    const Arrangement& arr = p.arr_;
    const RingSpec& ring = arr.ring();
    const int e = ring.degree();
    const int ell = arr.space_rank();

    p.rho_ = lcm_period(arr, limits);
    p.n_ = p.rho_.norm();
    const Int& n = p.n_;

    if (int_pow(n, ell) > to_int(limits.max_enumeration))
        throw resource_error("LayerPoset: torsion point count exceeds enumeration bound");

    // Numerator lattice: {w in O : w * rho contained in N*O}. Points of the
    // rho-torsion group are w / N with w ranging over it modulo N*Z^e.
    Lattice numerators = Lattice::full(e);
    Lattice n_full = Lattice::full(e).scaled(n);
    for (const RingElement& b : p.rho_.basis_elements())
        numerators = numerators.intersect(preimage_lattice(multiplication_matrix(b), n_full));

    std::vector<std::vector<Int>> coord_reps;
    {
        std::vector<Int> w(e, Int(0));
        while (true) {
            if (numerators.contains(w)) coord_reps.push_back(w);
            int i = e - 1;
            for (; i >= 0; --i) {
                w[i] += 1;
                if (w[i] < n) break;
                w[i] = 0;
            }
            if (i < 0) break;
        }
    }
    if (Int(static_cast<long>(coord_reps.size())) != n)
        throw std::logic_error("LayerPoset: torsion group has unexpected order");

    // All points of (rho^-1 / O)^ell, lexicographic.
    {
        std::vector<size_t> idx(ell, 0);
        while (true) {
            std::vector<Int> w;
            w.reserve(e * ell);
            for (int i = 0; i < ell; ++i)
                for (int j = 0; j < e; ++j) w.push_back(coord_reps[idx[i]][j]);
            p.points_.push_back(std::move(w));
            int i = ell - 1;
            for (; i >= 0; --i) {
                if (++idx[i] < coord_reps.size()) break;
                idx[i] = 0;
            }
            if (i < 0) break;
        }
    }

    // J(u) = {alpha : u * alpha integral}.
    p.point_masks_.resize(p.points_.size(), 0);
    for (size_t k = 0; k < p.points_.size(); ++k) {
        uint32_t mask = 0;
        for (int c = 0; c < arr.size(); ++c) {
            RingElement s = RingElement::zero(ring);
            for (int i = 0; i < ell; ++i) {
                std::vector<Int> comp(p.points_[k].begin() + e * i,
                                      p.points_[k].begin() + e * (i + 1));
                s = s + RingElement::from_coords(ring, comp) * arr.column(c)[i];
            }
            bool integral = true;
            for (const Int& x : s.coords())
                if (x % n != 0) integral = false;
            if (integral) mask |= 1u << c;
        }
        p.point_masks_[k] = mask;
    }

    std::vector<uint32_t> flats = arr.flats(limits);
    std::map<uint32_t, int> flat_rank;
    for (uint32_t f : flats) flat_rank[f] = arr.subset_rank(f);
    for (uint32_t f : flats) {
        FlatData data;
        data.matrix = arr.coefficient_matrix(f);
        data.scaled_image = Lattice::from_rows(data.matrix.cols(), data.matrix).scaled(n);
        data.rank = flat_rank[f];
        p.flat_data_.emplace(f, std::move(data));
    }

    std::map<uint32_t, int> mask_rank;  // subset ranks met during qualification
    auto rank_of = [&](uint32_t mask) {
        auto it = mask_rank.find(mask);
        if (it == mask_rank.end()) it = mask_rank.emplace(mask, arr.subset_rank(mask)).first;
        return it->second;
    };

    // A point u spawns a layer over the flat F exactly when some J <= J(u)
    // has closure F, i.e. when F cap J(u) already spans F.
    for (uint32_t f : flats) {
        const FlatData& data = p.flat_data_.at(f);
        std::vector<int> groups_first;           // representative point per coset
        std::vector<std::vector<Int>> group_rep;
        for (size_t k = 0; k < p.points_.size(); ++k) {
            if (rank_of(f & p.point_masks_[k]) != data.rank) continue;
            bool placed = false;
            for (size_t g = 0; g < group_rep.size(); ++g) {
                if (p.coset_equivalent(p.points_[k], group_rep[g], f)) {
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                groups_first.push_back(static_cast<int>(k));
                group_rep.push_back(p.points_[k]);
            }
        }
        for (size_t g = 0; g < group_rep.size(); ++g) {
            Layer layer;
            layer.flat = f;
            layer.rep = group_rep[g];
            layer.defining_subset = f & p.point_masks_[groups_first[g]];
            layer.dim = ell - data.rank;
            p.layers_.push_back(std::move(layer));
        }
    }

    // Order: Z <= W iff W is contained in Z as a subset, i.e. the flat of Z
    // is contained in the flat of W and the representatives agree mod
    // pi(H_{F_Z, K}).
    const int s = p.size();
    p.leq_.assign(s, std::vector<char>(s, 0));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            if ((p.layers_[i].flat & ~p.layers_[j].flat) != 0) continue;
            p.leq_[i][j] =
                p.coset_equivalent(p.layers_[j].rep, p.layers_[i].rep, p.layers_[i].flat) ? 1 : 0;
        }

    // Layer construction emits flats in rank order, so indices are already a
    // linear extension: i < j whenever layer_i < layer_j.
    p.mobius_.assign(s, std::vector<Int>(s, Int(0)));
    for (int i = 0; i < s; ++i) {
        p.mobius_[i][i] = 1;
        for (int j = i + 1; j < s; ++j) {
            if (!p.leq_[i][j]) continue;
            Int acc = 0;
            for (int k = i; k < j; ++k)
                if (p.leq_[i][k] && p.leq_[k][j]) acc += p.mobius_[i][k];
            p.mobius_[i][j] = -acc;
        }
    }

    std::vector<int> atom_list = p.atoms();
    for (int i = 0; i < s; ++i) {
        int count = 0;
        for (int atom : atom_list)
            if (p.leq_[atom][i]) ++count;
        p.layers_[i].atom_count = count;
    }
    return p;
}

bool LayerPoset::coset_equivalent(const std::vector<Int>& wu, const std::vector<Int>& wv,
                                  uint32_t flat) const {
    const FlatData& data = flat_data_.at(flat);
    std::vector<Int> diff(wu.size());
    for (size_t i = 0; i < wu.size(); ++i) diff[i] = wu[i] - wv[i];
    return data.scaled_image.contains(multiply_row(diff, data.matrix));
}

std::vector<int> LayerPoset::atoms() const {
    std::vector<int> out;
    for (int i = 1; i < size(); ++i) {
        bool minimal = true;
        for (int k = 1; k < size(); ++k)
            if (k != i && leq_[k][i]) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(i);
    }
    return out;
}

std::vector<Int> LayerPoset::torsion_action(const RingElement& g, const std::vector<Int>& w) const {
    const int e = arr_.ring().degree();
    std::vector<Int> out;
    out.reserve(w.size());
    for (size_t i = 0; i < w.size(); i += e) {
        std::vector<Int> comp(w.begin() + i, w.begin() + i + e);
        RingElement scaled = RingElement::from_coords(arr_.ring(), comp) * g;
        for (const Int& x : scaled.coords()) out.push_back(x);
    }
    return out;
}

std::vector<char> LayerPoset::torsion_members(const Ideal& a) const {
    Ideal kappa = a.sum(rho_);
    std::vector<char> members(size(), 0);
    for (int i = 0; i < size(); ++i) {
        bool torsion = true;
        for (const RingElement& g : kappa.basis_elements()) {
            const FlatData& data = flat_data_.at(layers_[i].flat);
            if (!data.scaled_image.contains(
                    multiply_row(torsion_action(g, layers_[i].rep), data.matrix))) {
                torsion = false;
                break;
            }
        }
        members[i] = torsion ? 1 : 0;
    }
    return members;
}

std::vector<std::vector<Int>> LayerPoset::subposet_mobius(const std::vector<char>& members) const {
    const int s = size();
    std::vector<std::vector<Int>> mu(s, std::vector<Int>(s, Int(0)));
    for (int i = 0; i < s; ++i) {
        if (!members[i]) continue;
        mu[i][i] = 1;
        for (int j = i + 1; j < s; ++j) {
            if (!members[j] || !leq_[i][j]) continue;
            Int acc = 0;
            for (int k = i; k < j; ++k)
                if (members[k] && leq_[i][k] && leq_[k][j]) acc += mu[i][k];
            mu[i][j] = -acc;
        }
    }
    return mu;
}

BiPoly LayerPoset::poset_constituent(const Ideal& kappa) const {
    std::vector<char> members = torsion_members(kappa);
    std::vector<std::vector<Int>> mu = subposet_mobius(members);
    BiPoly out;
    for (int z = 0; z < size(); ++z) {
        if (!members[z]) continue;
        for (int y = z; y < size(); ++y) {
            if (!members[y] || !leq_[z][y]) continue;
            out = out + BiPoly::monomial(layers_[y].dim, layers_[z].atom_count, mu[z][y]);
        }
    }
    return out;
}

UniPoly LayerPoset::poset_characteristic(const Ideal& kappa) const {
    std::vector<char> members = torsion_members(kappa);
    std::vector<std::vector<Int>> mu = subposet_mobius(members);
    UniPoly out;
    for (int z = 0; z < size(); ++z) {
        if (!members[z]) continue;
        out = out + UniPoly::monomial(layers_[z].dim, mu[bottom()][z]);
    }
    return out;
}

Int LayerPoset::complement_count(int layer_index, const Ideal& a) const {
    std::vector<char> members = torsion_members(a);
    if (!members[layer_index])
        throw input_error("complement_count: layer is not torsion for the given ideal");
    std::vector<std::vector<Int>> mu = subposet_mobius(members);
    Int out = 0;
    for (int y = layer_index; y < size(); ++y) {
        if (!members[y] || !leq_[layer_index][y]) continue;
        out += mu[layer_index][y] * int_pow(a.norm(), layers_[y].dim);
    }
    return out;
}

bool LayerPoset::point_is_torsion(int k, const Ideal& a) const {
    for (const RingElement& g : a.basis_elements())
        for (const Int& x : torsion_action(g, points_[k]))
            if (x % n_ != 0) return false;
    return true;
}

bool LayerPoset::point_in_layer(int k, int layer_index) const {
    return coset_equivalent(points_[k], layers_[layer_index].rep, layers_[layer_index].flat);
}

int LayerPoset::minimal_layer_of_point(int k) const {
    std::vector<int> candidates;
    for (int i = 0; i < size(); ++i)
        if (point_in_layer(k, i)) candidates.push_back(i);
    for (int i : candidates) {
        bool top = true;
        for (int j : candidates)
            if (!leq_[j][i]) {
                top = false;
                break;
            }
        if (top) return i;
    }
    throw std::logic_error("minimal_layer_of_point: containing layers have no maximum");
}

int LayerPoset::point_weight(int k) const {
    int wt = 0;
    for (uint32_t cm : arr_.class_masks())
        if ((cm & point_masks_[k]) == 0) ++wt;
    return wt;
}

std::string LayerPoset::point_str(const std::vector<Int>& w) const {
    const int e = arr_.ring().degree();
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); i += e) {
        if (i) os << ", ";
        Int g = n_;
        for (int j = 0; j < e; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i + j].get_mpz_t());
        std::vector<Int> num(e);
        for (int j = 0; j < e; ++j) num[j] = w[i + j] / g;
        Int den = n_ / g;
        RingElement numerator = RingElement::from_coords(arr_.ring(), num);
        if (numerator.is_zero()) {
            os << "0";
        } else if (den == 1) {
            os << numerator.str();
        } else if (numerator.b() == 0 || arr_.ring().degree() == 1) {
            os << numerator.str() << "/" << den.get_str();
        } else {
            os << "(" << numerator.str() << ")/" << den.get_str();
        }
    }
    os << ")";
    return os.str();
}

std::string LayerPoset::dot() const {
    std::ostringstream os;
    os << "digraph layers {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < size(); ++i)
        os << "  n" << i << " [label=\"" << point_str(layers_[i].rep) << "\\ndim "
           << layers_[i].dim << "\"];\n";
    std::map<int, std::vector<int>> by_dim;
    for (int i = 0; i < size(); ++i) by_dim[layers_[i].dim].push_back(i);
    for (const auto& [dim, nodes] : by_dim) {
        os << "  { rank=same;";
        for (int i : nodes) os << " n" << i << ";";
        os << " }\n";
    }
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            if (i == j || !leq_[i][j]) continue;
            bool cover = true;
            for (int k = 0; k < size() && cover; ++k)
                if (k != i && k != j && leq_[i][k] && leq_[k][j]) cover = false;
            if (cover) os << "  n" << i << " -> n" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace qch
