#include "sla/modtools.hpp"

#include <algorithm>

namespace sla {

namespace {

/* Coordinates grouped by (weight, parity). */
std::map<std::pair<Weight, Parity>, std::vector<size_t>> weight_blocks(const Rep& r) {
    std::map<std::pair<Weight, Parity>, std::vector<size_t>> blocks;
    for (size_t i = 0; i < r.dim(); ++i) blocks[{r.vwt[i], r.vpar[i]}].push_back(i);
    return blocks;
}

/* Split vectors into their (weight, parity) homogeneous components and
 * return an independent homogeneous spanning set. */
std::vector<std::vector<Scalar>> homogenize(const Rep& r, const std::vector<std::vector<Scalar>>& vecs) {
    auto blocks = weight_blocks(r);
    SpanSolver span(r.dim());
    std::vector<std::vector<Scalar>> out;
    for (auto& v : vecs)
        for (auto& [key, coords] : blocks) {
            std::vector<Scalar> comp(r.dim());
            bool nonzero = false;
            for (size_t c : coords) {
                comp[c] = v[c];
                nonzero = nonzero || !v[c].is_zero();
            }
            if (nonzero && span.insert(comp)) out.push_back(std::move(comp));
        }
    return out;
}

bool is_homogeneous(const Rep& r, const std::vector<Scalar>& v) {
    bool found = false;
    std::pair<Weight, Parity> key;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::pair<Weight, Parity> k{r.vwt[i], r.vpar[i]};
        if (!found) {
            key = k;
            found = true;
        } else if (!(k == key)) {
            return false;
        }
    }
    return true;
}

}  // namespace

SuperDim basis_sdim(const Rep& r, const std::vector<std::vector<Scalar>>& basis) {
    SuperDim d;
    for (auto& v : basis) {
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                (r.vpar[i] == Parity::even ? d.ev : d.od)++;
                break;
            }
    }
    return d;
}

std::vector<SingularSpace> singular_vectors(const Rep& r, const Borel& b) {
    // stack the positive-part operators and intersect kernels per weight block
    std::vector<int> nplus;
    for (int i : b.members) {
        bool cartan = std::find(r.g->cartan.begin(), r.g->cartan.end(), i) != r.g->cartan.end();
        if (!cartan) nplus.push_back(i);
    }
    auto blocks = weight_blocks(r);
    std::map<Weight, SingularSpace> found;
    for (auto& [key, coords] : blocks) {
        Mat stacked(nplus.size() * r.dim(), coords.size());
        for (size_t k = 0; k < nplus.size(); ++k)
            for (size_t rr = 0; rr < r.dim(); ++rr)
                for (size_t c = 0; c < coords.size(); ++c)
                    stacked(k * r.dim() + rr, c) = r.op[nplus[k]](rr, coords[c]);
        for (auto& kv : kernel(stacked)) {
            std::vector<Scalar> full(r.dim());
            for (size_t c = 0; c < coords.size(); ++c) full[coords[c]] = kv[c];
            auto& slot = found[key.first];
            slot.wt = key.first;
            (key.second == Parity::even ? slot.even_vecs : slot.odd_vecs).push_back(std::move(full));
        }
    }
    std::vector<SingularSpace> out;
    for (auto& [w, s] : found) out.push_back(s);
    return out;
}

std::vector<std::vector<Scalar>> stable_span(const Rep& r, const std::vector<std::vector<Scalar>>& vecs) {
    SpanSolver span(r.dim());
    std::vector<std::vector<Scalar>> basis;
    auto seed = homogenize(r, vecs);
    for (auto& v : seed)
        if (span.insert(v)) basis.push_back(v);
    for (size_t i = 0; i < basis.size(); ++i)
        for (auto& op : r.op) {
            auto w = op.apply(basis[i]);
            bool nz = false;
            for (auto& x : w) nz = nz || !x.is_zero();
            if (nz && span.insert(w)) basis.push_back(std::move(w));
        }
    return homogenize(r, basis);
}

std::vector<std::vector<Scalar>> maximal_submodule_avoiding(const Rep& r,
                                                            const std::vector<size_t>& coords) {
    std::vector<bool> avoid(r.dim(), false);
    for (size_t c : coords) avoid[c] = true;
    // start from the coordinate subspace missing the marked coordinates and
    // shrink until operator-stable
    std::vector<std::vector<Scalar>> basis;
    for (size_t i = 0; i < r.dim(); ++i)
        if (!avoid[i]) {
            std::vector<Scalar> e(r.dim());
            e[i] = Scalar(1);
            basis.push_back(std::move(e));
        }
    while (!basis.empty()) {
        SpanSolver span(r.dim());
        for (auto& v : basis) span.insert(v);
        size_t nb = basis.size();
        std::vector<std::vector<Scalar>> residual_rows;  // rows over the c-coefficients
        for (auto& op : r.op) {
            std::vector<std::vector<Scalar>> red(nb);
            bool any = false;
            for (size_t j = 0; j < nb; ++j) {
                red[j] = span.reduce(op.apply(basis[j]));
                for (auto& x : red[j]) any = any || !x.is_zero();
            }
            if (!any) continue;
            for (size_t k = 0; k < r.dim(); ++k) {
                bool nz = false;
                for (size_t j = 0; j < nb; ++j) nz = nz || !red[j][k].is_zero();
                if (!nz) continue;
                std::vector<Scalar> row(nb);
                for (size_t j = 0; j < nb; ++j) row[j] = red[j][k];
                residual_rows.push_back(std::move(row));
            }
        }
        if (residual_rows.empty()) return basis;  // stable
        Mat cond(residual_rows.size(), nb);
        for (size_t i = 0; i < residual_rows.size(); ++i)
            for (size_t j = 0; j < nb; ++j) cond(i, j) = residual_rows[i][j];
        auto ker = kernel(cond);
        std::vector<std::vector<Scalar>> next;
        for (auto& coeffs : ker) {
            std::vector<Scalar> v(r.dim());
            for (size_t j = 0; j < nb; ++j)
                if (!coeffs[j].is_zero())
                    for (size_t k = 0; k < r.dim(); ++k) v[k] += coeffs[j] * basis[j][k];
            next.push_back(std::move(v));
        }
        basis = std::move(next);
    }
    return basis;
}

Rep sub_rep(const Rep& r, const std::vector<std::vector<Scalar>>& basis) {
    Rep s;
    s.g = r.g;
    SpanSolver span(r.dim());
    for (auto& v : basis) {
        if (!is_homogeneous(r, v)) throw std::invalid_argument("sub_rep needs homogeneous basis vectors");
        if (!span.insert(v)) throw std::invalid_argument("sub_rep basis is dependent");
    }
    for (auto& v : basis) {
        size_t lead = 0;
        while (lead < v.size() && v[lead].is_zero()) ++lead;
        s.vpar.push_back(r.vpar[lead]);
        s.vwt.push_back(r.vwt[lead]);
    }
    for (auto& op : r.op) {
        Mat m(basis.size(), basis.size());
        for (size_t j = 0; j < basis.size(); ++j) {
            auto c = span.coords(op.apply(basis[j]));
            if (!c) throw std::invalid_argument("sub_rep: span is not operator-stable");
            for (size_t i = 0; i < basis.size(); ++i) m(i, j) = (*c)[i];
        }
        s.op.push_back(std::move(m));
    }
    s.provenance = "sub:" + r.provenance;
    return s;
}

Rep quotient_rep(const Rep& r, const std::vector<std::vector<Scalar>>& sub_basis) {
    SpanSolver span(r.dim());
    for (auto& v : sub_basis) {
        if (!is_homogeneous(r, v))
            throw std::invalid_argument("quotient_rep needs homogeneous subspace vectors");
        span.insert(v);
    }
    // stability check
    for (auto& op : r.op)
        for (auto& v : sub_basis)
            if (!span.contains(op.apply(v)))
                throw std::invalid_argument("quotient_rep: subspace is not operator-stable");
    std::vector<bool> pivot(r.dim(), false);
    for (auto& row : span.echelon_rows()) {
        size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead < row.size()) pivot[lead] = true;
    }
    std::vector<size_t> comp;
    for (size_t i = 0; i < r.dim(); ++i)
        if (!pivot[i]) comp.push_back(i);
    Rep s;
    s.g = r.g;
    for (size_t c : comp) {
        s.vpar.push_back(r.vpar[c]);
        s.vwt.push_back(r.vwt[c]);
    }
    for (auto& op : r.op) {
        Mat m(comp.size(), comp.size());
        for (size_t j = 0; j < comp.size(); ++j) {
            std::vector<Scalar> e(r.dim());
            e[comp[j]] = Scalar(1);
            auto w = span.reduce(op.apply(e));
            for (size_t i = 0; i < comp.size(); ++i) m(i, j) = w[comp[i]];
        }
        s.op.push_back(std::move(m));
    }
    s.provenance = "quot:" + r.provenance;
    return s;
}

std::vector<std::vector<Scalar>> radical_of_hw_module(const HighestWeightModule& hw) {
    return maximal_submodule_avoiding(hw.rep, hw.hw_coords);
}

Rep irreducible_quotient(const HighestWeightModule& hw) {
    auto rad = radical_of_hw_module(hw);
    if (rad.size() == hw.rep.dim())
        throw std::invalid_argument("irreducible quotient of an inconsistent truncation");
    Rep L = rad.empty() ? hw.rep : quotient_rep(hw.rep, homogenize(hw.rep, rad));
    L.provenance = "irr(" + hw.lambda.str() + ")@" + hw.borel_label;
    auto v = verify_representation(L);
    if (!v.ok)
        throw std::runtime_error("irreducible quotient failed verification (increase depth): " + v.detail);
    return L;
}

std::vector<Mat> image_algebra(const Rep& r) { return span_closure(r.op, r.dim()); }

bool is_completely_reducible(const Rep& r, size_t dim_cap) {
    if (r.dim() > dim_cap)
        throw std::invalid_argument("complete-reducibility check beyond the configured dimension cap");
    auto alg = image_algebra(r);
    return dickson_radical(alg).empty();
}

static std::vector<std::vector<Scalar>> sample_singulars(const Rep& r, const Borel& b,
                                                         std::mt19937_64& rng, int samples_per_space) {
    std::uniform_int_distribution<long> coef(-3, 3);
    std::vector<std::vector<Scalar>> out;
    for (auto& sp : singular_vectors(r, b)) {
        for (auto* side : {&sp.even_vecs, &sp.odd_vecs}) {
            if (side->empty()) continue;
            for (auto& v : *side) out.push_back(v);
            if (side->size() > 1) {
                for (int s = 0; s < samples_per_space; ++s) {
                    std::vector<Scalar> v(r.dim());
                    bool nz = false;
                    for (auto& base : *side) {
                        Scalar c = Scalar(Rat(coef(rng)));
                        nz = nz || !c.is_zero();
                        for (size_t i = 0; i < v.size(); ++i) v[i] += c * base[i];
                    }
                    if (nz) out.push_back(std::move(v));
                }
            }
        }
    }
    return out;
}

bool is_irreducible(const Rep& r, const Borel& b, std::mt19937_64& rng, int samples_per_space) {
    if (r.dim() == 0) return false;
    auto cands = sample_singulars(r, b, rng, samples_per_space);
    if (cands.empty()) return false;
    for (auto& v : cands) {
        bool nz = false;
        for (auto& x : v) nz = nz || !x.is_zero();
        if (!nz) continue;
        if (stable_span(r, {v}).size() != r.dim()) return false;
    }
    return true;
}

std::vector<std::vector<Scalar>> socle_basis(const Rep& r, const Borel& b, std::mt19937_64& rng) {
    SpanSolver span(r.dim());
    std::vector<std::vector<Scalar>> out;
    for (auto& v : sample_singulars(r, b, rng, 5)) {
        auto sub = stable_span(r, {v});
        if (sub.empty()) continue;
        Rep s = sub_rep(r, sub);
        if (!is_irreducible(s, b, rng)) continue;
        for (auto& w : sub)
            if (span.insert(w)) out.push_back(w);
    }
    return out;
}

std::vector<SuperDim> socle_filtration(const Rep& r, const Borel& b, std::mt19937_64& rng,
                                       std::vector<std::map<Weight, SuperDim>>* layer_weights) {
    std::vector<SuperDim> layers;
    Rep cur = r;
    if (layer_weights) layer_weights->clear();
    while (cur.dim() > 0) {
        auto soc = socle_basis(cur, b, rng);
        if (soc.empty()) throw std::runtime_error("socle computation found no irreducible submodule");
        layers.push_back(basis_sdim(cur, soc));
        if (layer_weights) {
            Rep socrep = sub_rep(cur, soc);
            layer_weights->push_back(socrep.weight_decomposition());
        }
        if (soc.size() == cur.dim()) break;
        cur = quotient_rep(cur, soc);
    }
    return layers;
}

}  // namespace sla
