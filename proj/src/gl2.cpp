#include "cat2vect/gl2.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cat2vect {

namespace {

std::vector<int> perm_inverse(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GL2Presentation

GL2Presentation::GL2Presentation(int n, GroupTable g, long long p, std::uint64_t seed)
    : n_(n),
      alg_(std::move(g), FieldSpec::prime(p)),
      wd_(wedderburn(alg_, seed)),
      blocks_(alg_, wd_) {
    if (n < 1) throw Error("ShapeMismatch", "component count must be positive");
    long long e = alg_.group().exponent();
    if ((p - 1) % e != 0)
        throw Error("NotSplittingPrime", "p = 1 mod exp(G) required for the splitting field");
}

unsigned long long GL2Presentation::pi0_order() const {
    unsigned long long nf = 1;
    for (int i = 2; i <= n_; ++i) nf *= static_cast<unsigned long long>(i);
    unsigned long long out = 1;
    for (auto [d, k] : wd_.grouping) {
        (void)d;
        for (int i = 2; i <= k; ++i) out *= static_cast<unsigned long long>(i);
    }
    unsigned long long total = nf;
    for (int q = 0; q < n_; ++q) total *= out;
    return total;
}

unsigned long long GL2Presentation::pi1_order() const {
    unsigned long long total = 1;
    unsigned long long units = static_cast<unsigned long long>(alg_.field().characteristic() - 1);
    for (int i = 0; i < wd_.r * n_; ++i) total *= units;
    return total;
}

GL2Presentation::Pi0 GL2Presentation::pi0_identity() const {
    Pi0 e;
    e.sigma.resize(n_);
    std::iota(e.sigma.begin(), e.sigma.end(), 0);
    e.tuples.assign(n_, {});
    for (int q = 0; q < n_; ++q)
        for (auto [d, k] : wd_.grouping) {
            (void)d;
            std::vector<int> idp(k);
            std::iota(idp.begin(), idp.end(), 0);
            e.tuples[q].push_back(idp);
        }
    return e;
}

GL2Presentation::Pi0 GL2Presentation::pi0_mul(const Pi0& a, const Pi0& b) const {
    Pi0 r;
    r.sigma = perm_compose(a.sigma, b.sigma);
    auto a_inv = perm_inverse(a.sigma);
    r.tuples.resize(n_);
    for (int q = 0; q < n_; ++q) {
        const auto& left = a.tuples[q];
        const auto& right = b.tuples[a_inv[q]];
        for (size_t cls = 0; cls < left.size(); ++cls)
            r.tuples[q].push_back(perm_compose(left[cls], right[cls]));
    }
    return r;
}

GL2Presentation::Pi0 GL2Presentation::pi0_inverse(const Pi0& a) const {
    Pi0 r;
    r.sigma = perm_inverse(a.sigma);
    r.tuples.resize(n_);
    for (int q = 0; q < n_; ++q)
        for (const auto& t : a.tuples[a.sigma[q]]) r.tuples[q].push_back(perm_inverse(t));
    return r;
}

std::vector<GL2Presentation::Pi0> GL2Presentation::enumerate_pi0(std::uint64_t budget) const {
    if (pi0_order() > budget) throw Error("BudgetExceeded", "pi0 enumeration");
    auto sigmas = all_perms(n_);
    // all tuples for one component
    std::vector<std::vector<std::vector<int>>> component_tuples{{}};
    for (auto [d, k] : wd_.grouping) {
        (void)d;
        auto perms = all_perms(k);
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& partial : component_tuples)
            for (const auto& p : perms) {
                auto ext = partial;
                ext.push_back(p);
                next.push_back(std::move(ext));
            }
        component_tuples = std::move(next);
    }
    std::vector<Pi0> out;
    std::vector<int> pick(n_, 0);
    const int m = static_cast<int>(component_tuples.size());
    for (const auto& sigma : sigmas) {
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            Pi0 g;
            g.sigma = sigma;
            for (int q = 0; q < n_; ++q) g.tuples.push_back(component_tuples[pick[q]]);
            out.push_back(std::move(g));
            int q = 0;
            while (q < n_ && ++pick[q] == m) pick[q++] = 0;
            if (q == n_) break;
        }
    }
    return out;
}

GL2Presentation::Pi1 GL2Presentation::pi1_identity() const {
    return Pi1(wd_.r, std::vector<Scalar>(n_, Scalar::one(alg_.field())));
}

GL2Presentation::Pi1 GL2Presentation::pi1_mul(const Pi1& a, const Pi1& b) const {
    Pi1 r = a;
    for (int i = 0; i < wd_.r; ++i)
        for (int q = 0; q < n_; ++q) r[i][q] = r[i][q] * b[i][q];
    return r;
}

std::vector<GL2Presentation::Pi1> GL2Presentation::enumerate_pi1(std::uint64_t budget) const {
    if (pi1_order() > budget) throw Error("BudgetExceeded", "pi1 enumeration");
    const long long p = alg_.field().characteristic();
    std::vector<Pi1> out;
    const int cells = wd_.r * n_;
    std::vector<int> pick(cells, 1);
    while (true) {
        Pi1 u(wd_.r, std::vector<Scalar>(n_, Scalar::one(alg_.field())));
        for (int i = 0; i < wd_.r; ++i)
            for (int q = 0; q < n_; ++q) u[i][q] = Scalar::of_int(alg_.field(), pick[i * n_ + q]);
        out.push_back(std::move(u));
        int c = 0;
        while (c < cells && ++pick[c] == p) pick[c++] = 1;
        if (c == cells) break;
    }
    return out;
}

GL2Presentation::Pi1 GL2Presentation::act(const Pi0& g, const Pi1& u) const {
    auto sigma_inv = perm_inverse(g.sigma);
    Pi1 r = u;
    for (int q = 0; q < n_; ++q) {
        for (int cls = 0; cls < wd_.num_degree_classes(); ++cls) {
            auto tuple_inv = perm_inverse(g.tuples[q][cls]);
            for (int p = 0; p < wd_.grouping[cls].second; ++p) {
                int row = wd_.block_index(cls, p);
                int src_row = wd_.block_index(cls, tuple_inv[p]);
                r[row][q] = u[src_row][sigma_inv[q]];
            }
        }
    }
    return r;
}

GL2Presentation::StrictAutoequiv GL2Presentation::autoequiv_identity() const {
    StrictAutoequiv f;
    f.sigma.resize(n_);
    std::iota(f.sigma.begin(), f.sigma.end(), 0);
    f.hom_maps.assign(n_, AlgAutomorphism::identity(alg_));
    return f;
}

GL2Presentation::StrictAutoequiv GL2Presentation::compose(const StrictAutoequiv& f,
                                                          const StrictAutoequiv& g) const {
    StrictAutoequiv r;
    r.sigma = perm_compose(f.sigma, g.sigma);
    for (int q = 0; q < n_; ++q) r.hom_maps.push_back(f.hom_maps[g.sigma[q]].compose(g.hom_maps[q]));
    return r;
}

GL2Presentation::StrictAutoequiv GL2Presentation::section(const Pi0& g) const {
    StrictAutoequiv f;
    f.sigma = g.sigma;
    for (int q = 0; q < n_; ++q) f.hom_maps.push_back(blocks_.permutation_automorphism(g.tuples[g.sigma[q]]));
    return f;
}

GL2Presentation::Pi0 GL2Presentation::class_of(const StrictAutoequiv& f) const {
    Pi0 g;
    g.sigma = f.sigma;
    g.tuples.resize(n_);
    for (int q_src = 0; q_src < n_; ++q_src) {
        auto flat = blocks_.idempotent_permutation(f.hom_maps[q_src]);
        std::vector<std::vector<int>> per_class;
        for (int cls = 0; cls < wd_.num_degree_classes(); ++cls) {
            std::vector<int> t(wd_.grouping[cls].second);
            for (int p = 0; p < wd_.grouping[cls].second; ++p) {
                auto [cls2, pos2] = wd_.class_position(flat[wd_.block_index(cls, p)]);
                if (cls2 != cls) throw Error("NotAutomorphism", "block permutation crosses degree classes");
                t[p] = pos2;
            }
            per_class.push_back(std::move(t));
        }
        g.tuples[f.sigma[q_src]] = std::move(per_class);
    }
    return g;
}

GL2Presentation::Units GL2Presentation::units_from_pi1(const Pi1& u) const {
    Units out;
    for (int q = 0; q < n_; ++q) {
        std::vector<Scalar> lambda(wd_.r);
        for (int i = 0; i < wd_.r; ++i) lambda[i] = u[i][q];
        out.push_back(blocks_.from_central_coordinates(lambda));
    }
    return out;
}

GL2Presentation::Pi1 GL2Presentation::pi1_from_units(const Units& u) const {
    Pi1 out(wd_.r, std::vector<Scalar>(n_, Scalar::zero(alg_.field())));
    for (int q = 0; q < n_; ++q) {
        if (!alg_.is_central_unit(u[q])) throw Error("NotCentral", "component is not a central unit");
        auto coords = blocks_.central_coordinates(u[q]);
        if (!coords) throw Error("NotCentral", "component is not in the center");
        for (int i = 0; i < wd_.r; ++i) out[i][q] = (*coords)[i];
    }
    return out;
}

GL2Presentation::Units GL2Presentation::act_direct(const StrictAutoequiv& f, const Units& u) const {
    for (const auto& comp : u)
        if (!alg_.is_central_unit(comp)) throw Error("NotCentral", "action needs central units");
    // delta: whisker with f on the left, component at source q
    Units delta;
    for (int q = 0; q < n_; ++q) delta.push_back(f.hom_maps[q].apply(u[q]));
    // gamma^{-1}: component q of the result is component sigma^{-1}(q) of delta
    auto sigma_inv = perm_inverse(f.sigma);
    Units out;
    for (int q = 0; q < n_; ++q) out.push_back(delta[sigma_inv[q]]);
    return out;
}

GL2Presentation::SplitReport GL2Presentation::verify_split(std::uint64_t budget) const {
    return verify_split_with([this](const Pi0& g) { return section(g); }, budget);
}

GL2Presentation::SplitReport GL2Presentation::verify_split_with(
    const std::function<StrictAutoequiv(const Pi0&)>& section_fn, std::uint64_t budget) const {
    SplitReport rep;
    auto elems = enumerate_pi0(budget);
    std::vector<StrictAutoequiv> sections;
    sections.reserve(elems.size());
    for (const auto& g : elems) sections.push_back(section_fn(g));
    rep.section_is_homomorphism = true;
    rep.projects_to_identity = true;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (!(class_of(sections[i]) == elems[i])) {
            rep.projects_to_identity = false;
            rep.failure = "section does not project back to its class";
        }
    }
    auto find_elem = [&](const Pi0& g) {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == g) return i;
        throw Error("ShapeMismatch", "product escaped the enumeration");
    };
    for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = 0; b < elems.size(); ++b) {
            StrictAutoequiv lhs = compose(sections[a], sections[b]);
            const StrictAutoequiv& rhs = sections[find_elem(pi0_mul(elems[a], elems[b]))];
            if (!(lhs == rhs)) {
                rep.section_is_homomorphism = false;
                rep.failure = "section is not multiplicative";
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// tabulated strict 2-groups

namespace {

/// Shared implementation: dense cell table with explicit composition maps.
class Tabulated2Group final : public Strict2Group {
  public:
    struct CellData {
        int src, tgt;
    };

    int num_objects() const override { return num_objects_; }
    int tensor(int a, int b) const override { return obj_tensor_[a][b]; }
    int unit_object() const override { return unit_; }
    int num_cells() const override { return static_cast<int>(cells_.size()); }
    int cell_src(int c) const override { return cells_[c].src; }
    int cell_tgt(int c) const override { return cells_[c].tgt; }
    std::vector<int> hom(int a, int b) const override { return hom_[a][b]; }
    int identity_cell(int a) const override { return identity_[a]; }
    int vcomp(int second, int first) const override {
        if (cells_[first].tgt != cells_[second].src) throw Error("NotA2Group", "vertical mismatch");
        return vcomp_fn_(second, first);
    }
    int vinv(int c) const override { return vinv_fn_(c); }
    int hcomp(int c1, int c2) const override { return hcomp_fn_(c1, c2); }

    int num_objects_ = 0;
    std::vector<std::vector<int>> obj_tensor_;
    int unit_ = 0;
    std::vector<CellData> cells_;
    std::vector<std::vector<std::vector<int>>> hom_;
    std::vector<int> identity_;
    std::function<int(int, int)> vcomp_fn_, hcomp_fn_;
    std::function<int(int)> vinv_fn_;

    void index_cells() {
        hom_.assign(num_objects_, std::vector<std::vector<int>>(num_objects_));
        for (size_t c = 0; c < cells_.size(); ++c) hom_[cells_[c].src][cells_[c].tgt].push_back(static_cast<int>(c));
    }
};

}  // namespace

void Strict2Group::validate(std::uint64_t budget) const {
    const int no = num_objects();
    // objects form a group under tensor
    for (int a = 0; a < no; ++a) {
        if (tensor(unit_object(), a) != a || tensor(a, unit_object()) != a)
            throw Error("NotA2Group", "tensor unit fails");
        bool has_inv = false;
        for (int b = 0; b < no; ++b)
            if (tensor(a, b) == unit_object() && tensor(b, a) == unit_object()) has_inv = true;
        if (!has_inv) throw Error("NotA2Group", "object without tensor inverse");
    }
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            for (int c = 0; c < no; ++c)
                if (tensor(tensor(a, b), c) != tensor(a, tensor(b, c)))
                    throw Error("NotA2Group", "tensor is not associative");
    // vertical structure: identities, composition, inverses
    const int nc = num_cells();
    for (int a = 0; a < no; ++a) {
        int ia = identity_cell(a);
        if (cell_src(ia) != a || cell_tgt(ia) != a) throw Error("NotA2Group", "identity cell endpoints");
    }
    for (int c = 0; c < nc; ++c) {
        if (vcomp(identity_cell(cell_tgt(c)), c) != c || vcomp(c, identity_cell(cell_src(c))) != c)
            throw Error("NotA2Group", "vertical unit law fails");
        int ci = vinv(c);
        if (vcomp(ci, c) != identity_cell(cell_src(c)) || vcomp(c, ci) != identity_cell(cell_tgt(c)))
            throw Error("NotA2Group", "cell is not vertically invertible");
    }
    std::mt19937_64 rng(2024);
    auto sample = [&](std::uint64_t space, std::uint64_t idx) {
        return space <= budget ? idx : rng() % space;
    };
    // vertical associativity on composable triples (sampled)
    std::uint64_t triple_space = static_cast<std::uint64_t>(nc) * nc * nc;
    std::uint64_t triples = std::min<std::uint64_t>(triple_space, budget);
    for (std::uint64_t t = 0; t < triples; ++t) {
        std::uint64_t idx = sample(triple_space, t);
        int c1 = static_cast<int>(idx % nc), c2 = static_cast<int>((idx / nc) % nc),
            c3 = static_cast<int>(idx / nc / nc);
        if (cell_tgt(c1) != cell_src(c2) || cell_tgt(c2) != cell_src(c3)) continue;
        if (vcomp(c3, vcomp(c2, c1)) != vcomp(vcomp(c3, c2), c1))
            throw Error("NotA2Group", "vertical associativity fails");
    }
    // horizontal structure and interchange (sampled pairs)
    std::uint64_t pair_space = static_cast<std::uint64_t>(nc) * nc;
    std::uint64_t pairs = std::min<std::uint64_t>(pair_space, budget);
    for (std::uint64_t t = 0; t < pairs; ++t) {
        std::uint64_t idx = sample(pair_space, t);
        int c1 = static_cast<int>(idx % nc), c2 = static_cast<int>(idx / nc);
        int h = hcomp(c1, c2);
        if (cell_src(h) != tensor(cell_src(c1), cell_src(c2)) ||
            cell_tgt(h) != tensor(cell_tgt(c1), cell_tgt(c2)))
            throw Error("NotA2Group", "horizontal composite endpoints");
    }
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            if (hcomp(identity_cell(a), identity_cell(b)) != identity_cell(tensor(a, b)))
                throw Error("NotA2Group", "identities do not tensor to identities");
    // interchange: (c2' . c1') x (c2 . c1) = (c2' x c2) . (c1' x c1)
    std::uint64_t quad_space = pair_space * pair_space;
    std::uint64_t quads = std::min<std::uint64_t>(quad_space, budget);
    for (std::uint64_t t = 0; t < quads; ++t) {
        std::uint64_t idx = sample(quad_space, t);
        int c1 = static_cast<int>(idx % nc);
        int c2 = static_cast<int>((idx / nc) % nc);
        int d1 = static_cast<int>((idx / nc / nc) % nc);
        int d2 = static_cast<int>(idx / nc / nc / nc);
        if (cell_tgt(c1) != cell_src(c2) || cell_tgt(d1) != cell_src(d2)) continue;
        int lhs = hcomp(vcomp(c2, c1), vcomp(d2, d1));
        int rhs = vcomp(hcomp(c2, d2), hcomp(c1, d1));
        if (lhs != rhs) throw Error("NotA2Group", "interchange law fails");
    }
    // horizontal associativity (sampled triples)
    for (std::uint64_t t = 0; t < triples; ++t) {
        std::uint64_t idx = sample(triple_space, t);
        int c1 = static_cast<int>(idx % nc), c2 = static_cast<int>((idx / nc) % nc),
            c3 = static_cast<int>(idx / nc / nc);
        if (hcomp(hcomp(c1, c2), c3) != hcomp(c1, hcomp(c2, c3)))
            throw Error("NotA2Group", "horizontal associativity fails");
    }
}

Strict2Group::Homotopy Strict2Group::homotopy() const {
    Homotopy h;
    const int no = num_objects();
    h.obj_class.assign(no, -1);
    int classes = 0;
    for (int a = 0; a < no; ++a) {
        if (h.obj_class[a] >= 0) continue;
        h.obj_class[a] = classes;
        h.class_rep.push_back(a);
        for (int b = a + 1; b < no; ++b)
            if (h.obj_class[b] < 0 && !hom(a, b).empty()) h.obj_class[b] = classes;
        ++classes;
    }
    // force the unit class to be represented by the unit object
    h.class_rep[h.obj_class[unit_object()]] = unit_object();

    std::vector<std::vector<int>> mul(classes, std::vector<int>(classes));
    for (int x = 0; x < classes; ++x)
        for (int y = 0; y < classes; ++y)
            mul[x][y] = h.obj_class[tensor(h.class_rep[x], h.class_rep[y])];
    std::vector<std::string> names(classes);
    for (int x = 0; x < classes; ++x) names[x] = "c" + std::to_string(x);
    h.pi0 = GroupTable::from_table(names, mul);

    h.pi1_cells = hom(unit_object(), unit_object());
    const int m = static_cast<int>(h.pi1_cells.size());
    auto pi1_index = [&](int cell) {
        auto it = std::find(h.pi1_cells.begin(), h.pi1_cells.end(), cell);
        if (it == h.pi1_cells.end()) throw Error("NotA2Group", "automorphism of the unit not indexed");
        return static_cast<int>(it - h.pi1_cells.begin());
    };
    std::vector<std::vector<int>> pmul(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) pmul[x][y] = pi1_index(vcomp(h.pi1_cells[x], h.pi1_cells[y]));
    std::vector<std::string> pnames(m);
    for (int x = 0; x < m; ++x) pnames[x] = "u" + std::to_string(x);
    h.pi1 = GroupTable::from_table(pnames, pmul);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (pmul[x][y] != pmul[y][x]) throw Error("NotA2Group", "automorphisms of the unit do not commute");

    // action: gamma_A^{-1}(delta_A(u)) on representatives
    h.action.assign(classes, std::vector<int>(m));
    for (int x = 0; x < classes; ++x) {
        int rep = h.class_rep[x];
        for (int u = 0; u < m; ++u) {
            int delta = hcomp(identity_cell(rep), h.pi1_cells[u]);
            int found = -1;
            for (int w = 0; w < m; ++w)
                if (hcomp(h.pi1_cells[w], identity_cell(rep)) == delta) {
                    found = w;
                    break;
                }
            if (found < 0) throw Error("NotA2Group", "gamma is not surjective on automorphisms");
            h.action[x][u] = found;
        }
    }
    return h;
}

// ---------------------------------------------------------------------------
// constructions

std::unique_ptr<Strict2Group> crossed_module_2group(const GroupTable& e, const GroupTable& h,
                                                    const std::vector<int>& boundary,
                                                    const std::vector<std::vector<int>>& action) {
    const int ne = e.order(), nh = h.order();
    if (static_cast<int>(boundary.size()) != ne || static_cast<int>(action.size()) != nh)
        throw Error("NotA2Group", "crossed module table sizes");
    // boundary must be a homomorphism, the action must be by automorphisms,
    // and the two crossed-module axioms must hold
    for (int x = 0; x < ne; ++x)
        for (int y = 0; y < ne; ++y)
            if (boundary[e.mul[x][y]] != h.mul[boundary[x]][boundary[y]])
                throw Error("NotA2Group", "boundary is not a homomorphism");
    for (int g = 0; g < nh; ++g) {
        for (int x = 0; x < ne; ++x)
            for (int y = 0; y < ne; ++y)
                if (action[g][e.mul[x][y]] != e.mul[action[g][x]][action[g][y]])
                    throw Error("NotA2Group", "action is not by automorphisms");
        for (int x = 0; x < ne; ++x) {
            if (boundary[action[g][x]] != h.mul[h.mul[g][boundary[x]]][h.inv[g]])
                throw Error("NotA2Group", "equivariance of the boundary fails");
        }
    }
    for (int x = 0; x < ne; ++x)
        for (int y = 0; y < ne; ++y)
            if (action[boundary[x]][y] != e.mul[e.mul[x][y]][e.inv[x]])
                throw Error("NotA2Group", "Peiffer identity fails");

    auto tg = std::make_unique<Tabulated2Group>();
    tg->num_objects_ = nh;
    tg->unit_ = h.id;
    tg->obj_tensor_ = h.mul;
    // cell id = elem * nh + src
    tg->cells_.resize(static_cast<size_t>(ne) * nh);
    for (int x = 0; x < ne; ++x)
        for (int s = 0; s < nh; ++s) tg->cells_[static_cast<size_t>(x) * nh + s] = {s, h.mul[boundary[x]][s]};
    tg->identity_.resize(nh);
    for (int s = 0; s < nh; ++s) tg->identity_[s] = e.id * nh + s;
    tg->index_cells();
    auto eh = [ne, nh](int c) { return std::pair<int, int>{c / nh, c % nh}; };
    GroupTable et = e, ht = h;
    std::vector<int> bd = boundary;
    std::vector<std::vector<int>> act = action;
    tg->vcomp_fn_ = [eh, et, nh](int second, int first) {
        auto [x2, s2] = eh(second);
        auto [x1, s1] = eh(first);
        (void)s2;
        return et.mul[x2][x1] * nh + s1;
    };
    tg->vinv_fn_ = [eh, et, ht, bd, nh](int c) {
        auto [x, s] = eh(c);
        return et.inv[x] * nh + ht.mul[bd[x]][s];
    };
    tg->hcomp_fn_ = [eh, et, ht, act, nh](int c1, int c2) {
        auto [x1, s1] = eh(c1);
        auto [x2, s2] = eh(c2);
        return et.mul[x1][act[s1][x2]] * nh + ht.mul[s1][s2];
    };
    tg->validate();
    return tg;
}

std::unique_ptr<Strict2Group> skeletal_split_2group(const GroupTable& pi0, const GroupTable& pi1,
                                                    const std::vector<std::vector<int>>& action) {
    std::vector<int> boundary(pi1.order(), pi0.id);
    std::vector<std::vector<int>> act(pi0.order());
    for (int g = 0; g < pi0.order(); ++g) act[g] = action[g];
    return crossed_module_2group(pi1, pi0, boundary, act);
}

std::unique_ptr<Strict2Group> nonskeletal_split_2group(const GroupTable& pi0, const GroupTable& pi1,
                                                       const std::vector<std::vector<int>>& action) {
    GroupTable z2 = GroupTable::cyclic(2);
    GroupTable e = GroupTable::direct_product(pi1, z2);
    GroupTable h = GroupTable::direct_product(pi0, z2);
    // boundary (m, t) = (1, t); action (g, x) |> (m, t) = (g . m, t)
    std::vector<int> boundary(e.order());
    for (int m = 0; m < pi1.order(); ++m)
        for (int t = 0; t < 2; ++t) boundary[m * 2 + t] = pi0.id * 2 + t;
    std::vector<std::vector<int>> act(h.order(), std::vector<int>(e.order()));
    for (int g = 0; g < pi0.order(); ++g)
        for (int x = 0; x < 2; ++x)
            for (int m = 0; m < pi1.order(); ++m)
                for (int t = 0; t < 2; ++t) act[g * 2 + x][m * 2 + t] = action[g][m] * 2 + t;
    return crossed_module_2group(e, h, boundary, act);
}

namespace {

/// Strict self-equivalences of the linearized homogeneous groupoid,
/// enumerated explicitly. Cells are unit tuples; compositions are computed on
/// demand and resolved back to ids through a lookup key.
class Autoequiv2Group final : public Strict2Group {
  public:
    Autoequiv2Group(int n, const GroupTable& g, long long p, std::uint64_t budget)
        : n_(n), alg_(g, FieldSpec::prime(p)) {
        autos_ = enumerate_algebra_automorphisms(alg_, budget);
        // all units of the algebra
        std::uint64_t total = 1;
        for (int i = 0; i < alg_.dim(); ++i) {
            total *= static_cast<std::uint64_t>(p);
            if (total > budget) throw Error("BudgetExceeded", "unit enumeration");
        }
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t rem = code;
            GroupAlgebra::Vec v = alg_.zero();
            for (int i = 0; i < alg_.dim(); ++i) {
                v[i] = Scalar::of_int(alg_.field(), static_cast<long long>(rem % p));
                rem /= p;
            }
            if (alg_.is_unit(v)) units_.push_back(std::move(v));
        }
        // objects: (sigma, automorphism index per source component)
        auto sigmas = all_perms(n_);
        const int na = static_cast<int>(autos_.size());
        std::uint64_t obj_count = sigmas.size();
        for (int q = 0; q < n_; ++q) obj_count *= static_cast<std::uint64_t>(na);
        if (obj_count > budget) throw Error("BudgetExceeded", "object enumeration");
        for (size_t s = 0; s < sigmas.size(); ++s) {
            std::vector<int> pick(n_, 0);
            while (true) {
                objects_.push_back({static_cast<int>(s), pick});
                obj_lookup_[key_of(static_cast<int>(s), pick)] = static_cast<int>(objects_.size()) - 1;
                int q = 0;
                while (q < n_ && ++pick[q] == na) pick[q++] = 0;
                if (q == n_) break;
            }
        }
        sigmas_ = std::move(sigmas);
        // cells: pairs with equal sigma and an intertwining unit tuple
        std::uint64_t cell_space = static_cast<std::uint64_t>(objects_.size()) * objects_.size();
        for (int q = 0; q < n_; ++q) {
            cell_space *= units_.size();
            if (cell_space > budget) throw Error("BudgetExceeded", "cell enumeration");
        }
        for (size_t a = 0; a < objects_.size(); ++a)
            for (size_t b = 0; b < objects_.size(); ++b) {
                if (objects_[a].sigma != objects_[b].sigma) continue;
                std::vector<int> tuple(n_, 0);
                while (true) {
                    if (intertwines(static_cast<int>(a), static_cast<int>(b), tuple)) {
                        cells_.push_back({static_cast<int>(a), static_cast<int>(b), tuple});
                        cell_lookup_[cell_key(static_cast<int>(a), static_cast<int>(b), tuple)] =
                            static_cast<int>(cells_.size()) - 1;
                    }
                    int q = 0;
                    while (q < n_ && ++tuple[q] == static_cast<int>(units_.size())) tuple[q++] = 0;
                    if (q == n_) break;
                }
            }
        hom_.assign(objects_.size(), std::vector<std::vector<int>>(objects_.size()));
        for (size_t c = 0; c < cells_.size(); ++c)
            hom_[cells_[c].src][cells_[c].tgt].push_back(static_cast<int>(c));
        identity_.assign(objects_.size(), -1);
        int one_idx = unit_index(alg_.one());
        for (size_t o = 0; o < objects_.size(); ++o) {
            std::vector<int> ones(n_, one_idx);
            identity_[o] = cell_lookup_.at(cell_key(static_cast<int>(o), static_cast<int>(o), ones));
        }
        // unit object: identity permutation, identity automorphisms
        int id_auto = -1;
        for (int i = 0; i < na; ++i)
            if (autos_[i] == AlgAutomorphism::identity(alg_)) id_auto = i;
        unit_ = obj_lookup_.at(key_of(0, std::vector<int>(n_, id_auto)));
        if (objects_[unit_].sigma != 0) throw Error("NotA2Group", "unit object not found");
    }

    int num_objects() const override { return static_cast<int>(objects_.size()); }
    int unit_object() const override { return unit_; }

    int tensor(int a, int b) const override {
        const Obj& f = objects_[a];
        const Obj& g = objects_[b];
        const auto& sf = sigmas_[f.sigma];
        const auto& sg = sigmas_[g.sigma];
        std::vector<int> comp_sigma = perm_compose(sf, sg);
        int cs = sigma_index(comp_sigma);
        std::vector<int> maps(n_);
        for (int q = 0; q < n_; ++q)
            maps[q] = auto_index(autos_[f.autos[sg[q]]].compose(autos_[g.autos[q]]));
        return obj_lookup_.at(key_of(cs, maps));
    }

    int num_cells() const override { return static_cast<int>(cells_.size()); }
    int cell_src(int c) const override { return cells_[c].src; }
    int cell_tgt(int c) const override { return cells_[c].tgt; }
    std::vector<int> hom(int a, int b) const override { return hom_[a][b]; }
    int identity_cell(int a) const override { return identity_[a]; }

    int vcomp(int second, int first) const override {
        const Cell& c1 = cells_[first];
        const Cell& c2 = cells_[second];
        if (c1.tgt != c2.src) throw Error("NotA2Group", "vertical mismatch");
        std::vector<int> tuple(n_);
        for (int q = 0; q < n_; ++q)
            tuple[q] = unit_index(alg_.mul(units_[c2.units[q]], units_[c1.units[q]]));
        return cell_lookup_.at(cell_key(c1.src, c2.tgt, tuple));
    }

    int vinv(int c) const override {
        const Cell& cl = cells_[c];
        std::vector<int> tuple(n_);
        for (int q = 0; q < n_; ++q) tuple[q] = unit_index(*alg_.inverse(units_[cl.units[q]]));
        return cell_lookup_.at(cell_key(cl.tgt, cl.src, tuple));
    }

    int hcomp(int c1, int c2) const override {
        const Cell& t = cells_[c1];
        const Cell& r = cells_[c2];
        int src = tensor(t.src, r.src);
        int tgt = tensor(t.tgt, r.tgt);
        const Obj& f = objects_[t.src];
        const auto& sg = sigmas_[objects_[r.src].sigma];
        std::vector<int> tuple(n_);
        for (int q = 0; q < n_; ++q) {
            // (tau * rho)_q = tau_{sigma_g(q)} . F(rho_q)
            GroupAlgebra::Vec mapped = autos_[f.autos[sg[q]]].apply(units_[r.units[q]]);
            tuple[q] = unit_index(alg_.mul(units_[t.units[sg[q]]], mapped));
        }
        return cell_lookup_.at(cell_key(src, tgt, tuple));
    }

  private:
    struct Obj {
        int sigma;  // index into sigmas_
        std::vector<int> autos;
    };
    struct Cell {
        int src, tgt;
        std::vector<int> units;
    };

    std::string key_of(int sigma, const std::vector<int>& autos) const {
        std::string k = std::to_string(sigma);
        for (int a : autos) k += "," + std::to_string(a);
        return k;
    }
    std::string cell_key(int src, int tgt, const std::vector<int>& units) const {
        std::string k = std::to_string(src) + ":" + std::to_string(tgt);
        for (int u : units) k += "," + std::to_string(u);
        return k;
    }
    int sigma_index(const std::vector<int>& s) const {
        auto it = std::find(sigmas_.begin(), sigmas_.end(), s);
        return static_cast<int>(it - sigmas_.begin());
    }
    int auto_index(const AlgAutomorphism& a) const {
        for (size_t i = 0; i < autos_.size(); ++i)
            if (autos_[i] == a) return static_cast<int>(i);
        throw Error("NotA2Group", "composite automorphism missing from the enumeration");
    }
    int unit_index(const GroupAlgebra::Vec& u) const {
        for (size_t i = 0; i < units_.size(); ++i)
            if (units_[i] == u) return static_cast<int>(i);
        throw Error("NotA2Group", "unit missing from the enumeration");
    }
    bool intertwines(int a, int b, const std::vector<int>& tuple) const {
        // u_q phi_q(x) u_q^{-1} = phi'_q(x) on the group basis
        for (int q = 0; q < n_; ++q) {
            const auto& u = units_[tuple[q]];
            auto uinv = *alg_.inverse(u);
            for (int g = 0; g < alg_.dim(); ++g) {
                auto lhs = alg_.mul(alg_.mul(u, autos_[objects_[a].autos[q]].apply(alg_.basis_elem(g))), uinv);
                auto rhs = autos_[objects_[b].autos[q]].apply(alg_.basis_elem(g));
                if (lhs != rhs) return false;
            }
        }
        return true;
    }

    int n_;
    GroupAlgebra alg_;
    std::vector<AlgAutomorphism> autos_;
    std::vector<GroupAlgebra::Vec> units_;
    std::vector<std::vector<int>> sigmas_;
    std::vector<Obj> objects_;
    std::vector<Cell> cells_;
    std::map<std::string, int> obj_lookup_;
    std::map<std::string, int> cell_lookup_;
    std::vector<std::vector<std::vector<int>>> hom_;
    std::vector<int> identity_;
    int unit_ = 0;
};

}  // namespace

std::unique_ptr<Strict2Group> autoequivalence_2group(int n, const GroupTable& g, long long p,
                                                     std::uint64_t budget) {
    auto tg = std::make_unique<Autoequiv2Group>(n, g, p, budget);
    tg->validate(100'000);
    return tg;
}

// ---------------------------------------------------------------------------
// cocycle computation

int CocycleReport::alpha_at(int g1, int g2, int g3) const {
    return alpha[(static_cast<size_t>(g1) * pi0_order + g2) * pi0_order + g3];
}

CocycleReport compute_cocycle(const Strict2Group& tg, const CocycleChoices& choices) {
    auto h = tg.homotopy();
    const int n0 = h.pi0.order();
    const int n1 = h.pi1.order();

    // representatives: unit class forced to the unit object
    std::vector<int> rep = h.class_rep;
    for (auto [cls, obj] : choices.representatives) {
        if (cls < 0 || cls >= n0 || h.obj_class[obj] != cls)
            throw Error("NotA2Group", "representative not in its class");
        rep[cls] = obj;
    }
    rep[h.obj_class[tg.unit_object()]] = tg.unit_object();

    // comparison cells: object -> cell into the representative of its class
    std::vector<int> iota(tg.num_objects(), -1);
    for (int a = 0; a < tg.num_objects(); ++a) {
        int r = rep[h.obj_class[a]];
        if (a == r) {
            iota[a] = tg.identity_cell(a);
            continue;
        }
        auto cells = tg.hom(a, r);
        if (cells.empty()) throw Error("NotA2Group", "isomorphic objects without connecting cell");
        iota[a] = cells.front();
    }
    for (auto [obj, cell] : choices.iotas) {
        if (obj == rep[h.obj_class[obj]]) continue;  // identity forced on representatives
        if (tg.cell_src(cell) != obj || tg.cell_tgt(cell) != rep[h.obj_class[obj]])
            throw Error("NotA2Group", "comparison cell has wrong endpoints");
        iota[obj] = cell;
    }

    auto gamma_inv = [&](int obj, int aut_cell) {
        for (int w = 0; w < n1; ++w)
            if (tg.hcomp(h.pi1_cells[w], tg.identity_cell(obj)) == aut_cell) return w;
        throw Error("NotA2Group", "gamma preimage missing");
    };

    CocycleReport repo;
    repo.pi0_order = n0;
    repo.pi1_order = n1;
    repo.alpha.assign(static_cast<size_t>(n0) * n0 * n0, -1);
    for (int g1 = 0; g1 < n0; ++g1)
        for (int g2 = 0; g2 < n0; ++g2)
            for (int g3 = 0; g3 < n0; ++g3) {
                int g12 = h.pi0.mul[g1][g2];
                int g23 = h.pi0.mul[g2][g3];
                int g123 = h.pi0.mul[g1][g23];
                int a1 = rep[g1], a2 = rep[g2], a3 = rep[g3];
                int chain = tg.vinv(iota[tg.tensor(rep[g12], a3)]);
                chain = tg.vcomp(tg.hcomp(tg.vinv(iota[tg.tensor(a1, a2)]), tg.identity_cell(a3)), chain);
                chain = tg.vcomp(tg.hcomp(tg.identity_cell(a1), iota[tg.tensor(a2, a3)]), chain);
                chain = tg.vcomp(iota[tg.tensor(a1, rep[g23])], chain);
                if (tg.cell_src(chain) != rep[g123] || tg.cell_tgt(chain) != rep[g123])
                    throw Error("NotA2Group", "cocycle chain is not an automorphism of the representative");
                repo.alpha[(static_cast<size_t>(g1) * n0 + g2) * n0 + g3] = gamma_inv(rep[g123], chain);
            }

    repo.normalized = true;
    int e = h.pi0.id;
    for (int x = 0; x < n0; ++x)
        for (int y = 0; y < n0; ++y) {
            if (repo.alpha_at(e, x, y) != h.pi1.id || repo.alpha_at(x, e, y) != h.pi1.id ||
                repo.alpha_at(x, y, e) != h.pi1.id)
                repo.normalized = false;
        }
    repo.cocycle_identity = cocycle_identity_holds(h.pi0, h.pi1, h.action, repo.alpha);
    repo.identity_valued =
        std::all_of(repo.alpha.begin(), repo.alpha.end(), [&](int v) { return v == h.pi1.id; });
    return repo;
}

bool cocycle_identity_holds(const GroupTable& pi0, const GroupTable& pi1,
                            const std::vector<std::vector<int>>& action,
                            const std::vector<int>& alpha) {
    const int n0 = pi0.order();
    auto at = [&](int a, int b, int c) { return alpha[(static_cast<size_t>(a) * n0 + b) * n0 + c]; };
    for (int g1 = 0; g1 < n0; ++g1)
        for (int g2 = 0; g2 < n0; ++g2)
            for (int g3 = 0; g3 < n0; ++g3)
                for (int g4 = 0; g4 < n0; ++g4) {
                    // g1.a(g2,g3,g4) * a(g1, g2 g3, g4) * a(g1,g2,g3)
                    int lhs = action[g1][at(g2, g3, g4)];
                    lhs = pi1.mul[lhs][at(g1, pi0.mul[g2][g3], g4)];
                    lhs = pi1.mul[lhs][at(g1, g2, g3)];
                    // a(g1 g2, g3, g4) * a(g1, g2, g3 g4)
                    int rhs = pi1.mul[at(pi0.mul[g1][g2], g3, g4)][at(g1, g2, pi0.mul[g3][g4])];
                    if (lhs != rhs) return false;
                }
    return true;
}

std::optional<bool> cohomologically_trivial(const GroupTable& pi0, const GroupTable& pi1,
                                            const std::vector<std::vector<int>>& action,
                                            const std::vector<int>& alpha, std::uint64_t budget) {
    const int n0 = pi0.order(), n1 = pi1.order();
    // normalized 2-cochains: free on (pi0 \ e)^2
    std::vector<std::pair<int, int>> free_slots;
    for (int x = 0; x < n0; ++x)
        for (int y = 0; y < n0; ++y)
            if (x != pi0.id && y != pi0.id) free_slots.emplace_back(x, y);
    std::uint64_t total = 1;
    for (size_t i = 0; i < free_slots.size(); ++i) {
        total *= static_cast<std::uint64_t>(n1);
        if (total > budget) return std::nullopt;
    }
    std::vector<std::vector<int>> beta(n0, std::vector<int>(n0, pi1.id));
    auto at = [&](int a, int b, int c) { return alpha[(static_cast<size_t>(a) * n0 + b) * n0 + c]; };
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rem = code;
        for (auto [x, y] : free_slots) {
            beta[x][y] = static_cast<int>(rem % n1);
            rem /= n1;
        }
        bool ok = true;
        for (int g1 = 0; g1 < n0 && ok; ++g1)
            for (int g2 = 0; g2 < n0 && ok; ++g2)
                for (int g3 = 0; g3 < n0 && ok; ++g3) {
                    // d beta = g1.beta(g2,g3) - beta(g1 g2, g3) + beta(g1, g2 g3) - beta(g1, g2)
                    int v = action[g1][beta[g2][g3]];
                    v = pi1.mul[v][pi1.inv[beta[pi0.mul[g1][g2]][g3]]];
                    v = pi1.mul[v][beta[g1][pi0.mul[g2][g3]]];
                    v = pi1.mul[v][pi1.inv[beta[g1][g2]]];
                    if (v != at(g1, g2, g3)) ok = false;
                }
        if (ok) return true;
    }
    return false;
}

PresentationTables presentation_tables(const GL2Presentation& pres, std::uint64_t budget) {
    PresentationTables t;
    // the tables are quadratic in the group orders
    if (pres.pi0_order() * pres.pi0_order() > budget || pres.pi1_order() * pres.pi1_order() > budget)
        throw Error("BudgetExceeded", "homotopy tables too large to materialize");
    auto g_elems = pres.enumerate_pi0(budget);
    auto u_elems = pres.enumerate_pi1(budget);
    auto g_index = [&](const GL2Presentation::Pi0& g) {
        for (size_t i = 0; i < g_elems.size(); ++i)
            if (g_elems[i] == g) return static_cast<int>(i);
        throw Error("ShapeMismatch", "pi0 element escaped the enumeration");
    };
    auto u_index = [&](const GL2Presentation::Pi1& u) {
        for (size_t i = 0; i < u_elems.size(); ++i)
            if (u_elems[i] == u) return static_cast<int>(i);
        throw Error("ShapeMismatch", "pi1 element escaped the enumeration");
    };
    std::vector<std::vector<int>> mul0(g_elems.size(), std::vector<int>(g_elems.size()));
    for (size_t a = 0; a < g_elems.size(); ++a)
        for (size_t b = 0; b < g_elems.size(); ++b)
            mul0[a][b] = g_index(pres.pi0_mul(g_elems[a], g_elems[b]));
    std::vector<std::string> n0(g_elems.size());
    for (size_t i = 0; i < n0.size(); ++i) n0[i] = "g" + std::to_string(i);
    t.pi0 = GroupTable::from_table(n0, mul0);

    std::vector<std::vector<int>> mul1(u_elems.size(), std::vector<int>(u_elems.size()));
    for (size_t a = 0; a < u_elems.size(); ++a)
        for (size_t b = 0; b < u_elems.size(); ++b)
            mul1[a][b] = u_index(pres.pi1_mul(u_elems[a], u_elems[b]));
    std::vector<std::string> n1(u_elems.size());
    for (size_t i = 0; i < n1.size(); ++i) n1[i] = "u" + std::to_string(i);
    t.pi1 = GroupTable::from_table(n1, mul1);

    t.action.assign(g_elems.size(), std::vector<int>(u_elems.size()));
    for (size_t a = 0; a < g_elems.size(); ++a)
        for (size_t b = 0; b < u_elems.size(); ++b)
            t.action[a][b] = u_index(pres.act(g_elems[a], u_elems[b]));
    return t;
}

void TwoGroupTriple::validate() const {
    const int n0 = pi0.order(), n1 = pi1.order();
    if (static_cast<int>(action.size()) != n0)
        throw Error("NotA2Group", "action table size");
    for (int m = 0; m < n1; ++m)
        for (int m2 = 0; m2 < n1; ++m2)
            if (pi1.mul[m][m2] != pi1.mul[m2][m]) throw Error("NotA2Group", "pi1 is not abelian");
    for (int g = 0; g < n0; ++g) {
        std::vector<bool> seen(n1, false);
        for (int m = 0; m < n1; ++m) {
            int v = action[g][m];
            if (v < 0 || v >= n1 || seen[v]) throw Error("NotA2Group", "action is not bijective");
            seen[v] = true;
        }
        for (int m = 0; m < n1; ++m)
            for (int m2 = 0; m2 < n1; ++m2)
                if (action[g][pi1.mul[m][m2]] != pi1.mul[action[g][m]][action[g][m2]])
                    throw Error("NotA2Group", "action is not by automorphisms");
    }
    for (int m = 0; m < n1; ++m)
        if (action[pi0.id][m] != m) throw Error("NotA2Group", "unit acts nontrivially");
    for (int g = 0; g < n0; ++g)
        for (int g2 = 0; g2 < n0; ++g2)
            for (int m = 0; m < n1; ++m)
                if (action[pi0.mul[g][g2]][m] != action[g][action[g2][m]])
                    throw Error("NotA2Group", "action is not a group action");
    if (alpha.size() != static_cast<size_t>(n0) * n0 * n0)
        throw Error("NotA2Group", "cocycle table size");
    for (int x = 0; x < n0; ++x)
        for (int y = 0; y < n0; ++y) {
            auto at = [&](int a, int b, int c) {
                return alpha[(static_cast<size_t>(a) * n0 + b) * n0 + c];
            };
            if (at(pi0.id, x, y) != pi1.id || at(x, pi0.id, y) != pi1.id || at(x, y, pi0.id) != pi1.id)
                throw Error("NotA2Group", "cocycle is not normalized");
        }
    if (!cocycle_identity_holds(pi0, pi1, action, alpha))
        throw Error("NotA2Group", "cocycle identity fails");
}

// ---------------------------------------------------------------------------
// Weyl embedding

WeylReport weyl_embed(const FinCategory& c, const FieldSpec& k, std::uint64_t budget) {
    WeylReport rep;
    auto equiv = enumerate_equivalences(c, budget);
    const FinCategory& sk = equiv.skeleton;
    VectC v(sk, k);
    rep.weyl_pi0 = equiv.pi0_order;
    rep.weyl_pi1 = equiv.pi1_order;

    // extensions are injective on objects: distinct functors extend distinctly
    rep.injective_on_objects = true;
    for (size_t i = 0; i < equiv.functors.size(); ++i)
        for (size_t j = i + 1; j < equiv.functors.size(); ++j)
            if (equiv.functors[i] == equiv.functors[j]) rep.injective_on_objects = false;

    // K-linear natural automorphism count between extensions, pairwise
    const long long p = k.characteristic();
    if (p == 0) throw Error("FieldMismatch", "2-cell counting runs over a prime field");
    auto count_linear_cells = [&](const CatFunctor& f, const CatFunctor& g) -> unsigned long long {
        // unknown components u_x in K[Hom(f x, g x)]; naturality per morphism
        std::vector<int> offset(sk.num_objects() + 1, 0);
        for (int x = 0; x < sk.num_objects(); ++x)
            offset[x + 1] = offset[x] + static_cast<int>(sk.hom(f.obj_map[x], g.obj_map[x]).size());
        const int unknowns = offset.back();
        if (unknowns == 0) return 0;
        int rows = 0;
        std::vector<int> eq_offset;
        for (int m = 0; m < sk.num_morphisms(); ++m) {
            eq_offset.push_back(rows);
            rows += static_cast<int>(
                sk.hom(f.obj_map[sk.morph(m).src], g.obj_map[sk.morph(m).tgt]).size());
        }
        KCat kc(sk, k);
        ScalarMat sys(rows, unknowns, k);
        for (int m = 0; m < sk.num_morphisms(); ++m) {
            const auto& mm = sk.morph(m);
            // u_{tgt} o f(m) - g(m) o u_{src} = 0
            const auto& tgt_basis = sk.hom(f.obj_map[mm.tgt], g.obj_map[mm.tgt]);
            for (size_t b = 0; b < tgt_basis.size(); ++b) {
                LinMorph term = kc.compose(kc.of_base(tgt_basis[b]), kc.of_base(f.mor_map[m]));
                auto coords = kc.to_vector(term);
                for (size_t r = 0; r < coords.size(); ++r)
                    sys.at(eq_offset[m] + static_cast<int>(r), offset[mm.tgt] + static_cast<int>(b)) =
                        coords[r];
            }
            const auto& src_basis = sk.hom(f.obj_map[mm.src], g.obj_map[mm.src]);
            for (size_t b = 0; b < src_basis.size(); ++b) {
                LinMorph term = kc.compose(kc.of_base(g.mor_map[m]), kc.of_base(src_basis[b]));
                auto coords = kc.to_vector(term);
                for (size_t r = 0; r < coords.size(); ++r)
                    sys.at(eq_offset[m] + static_cast<int>(r), offset[mm.src] + static_cast<int>(b)) =
                        sys.at(eq_offset[m] + static_cast<int>(r), offset[mm.src] + static_cast<int>(b)) -
                        coords[r];
            }
        }
        auto basis = nullspace(sys);
        std::uint64_t total = 1;
        for (size_t i = 0; i < basis.size(); ++i) {
            total *= static_cast<std::uint64_t>(p);
            if (total > budget) throw Error("BudgetExceeded", "2-cell counting");
        }
        unsigned long long count = 0;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t rem = code;
            std::vector<Scalar> sol(unknowns, Scalar::zero(k));
            for (const auto& b : basis) {
                long long coef = static_cast<long long>(rem % p);
                rem /= p;
                for (int i = 0; i < unknowns; ++i)
                    sol[i] = sol[i] + Scalar::of_int(k, coef) * b[i];
            }
            // every component must be invertible in the linearized category
            bool invertible = true;
            for (int x = 0; x < sk.num_objects() && invertible; ++x) {
                const auto& basis_x = sk.hom(f.obj_map[x], g.obj_map[x]);
                std::vector<Scalar> coords(basis_x.size());
                for (size_t bb = 0; bb < basis_x.size(); ++bb) coords[bb] = sol[offset[x] + static_cast<int>(bb)];
                LinMorph u = kc.from_vector(f.obj_map[x], g.obj_map[x], coords);
                MatMorph cell = v.zero_morph(SeqObject{{f.obj_map[x]}}, SeqObject{{g.obj_map[x]}});
                cell.cells[0][0] = u;
                if (v.invert(cell).status != VectC::InvertResult::Status::Invertible) invertible = false;
            }
            if (invertible) ++count;
        }
        return count;
    };

    rep.gl_pi1 = count_linear_cells(CatFunctor::identity(sk), CatFunctor::identity(sk));
    rep.faithful = true;
    rep.full = true;
    for (size_t i = 0; i < equiv.functors.size(); ++i)
        for (size_t j = 0; j < equiv.functors.size(); ++j) {
            auto base_cells = natural_isos(sk, equiv.functors[i], equiv.functors[j]);
            unsigned long long linear = count_linear_cells(equiv.functors[i], equiv.functors[j]);
            rep.cell_counts.push_back({static_cast<int>(base_cells.size()), static_cast<int>(linear)});
            if (static_cast<unsigned long long>(base_cells.size()) > linear) rep.faithful = false;
            if (static_cast<unsigned long long>(base_cells.size()) != linear) rep.full = false;
        }
    return rep;
}

// ---------------------------------------------------------------------------
// brute-force oracle

OracleCounts enumerate_autoequiv_oracle(const FinCategory& c, long long p, std::uint64_t budget) {
    if (!is_disjoint_union_of_monoids(c))
        throw Error("BudgetExceeded", "oracle needs a disjoint union of one-object components");
    const FieldSpec k = FieldSpec::prime(p);
    const int n = c.num_objects();
    KCat kc(c, k);

    // all linear unit-preserving multiplicative bijections per object pair
    auto algebra_isos = [&](int x, int y) -> std::vector<ScalarMat> {
        const auto& bx = c.hom(x, x);
        const auto& by = c.hom(y, y);
        std::vector<ScalarMat> result;
        if (bx.size() != by.size()) return result;
        const int m = static_cast<int>(bx.size());
        std::uint64_t total = 1;
        for (int i = 0; i < m * m; ++i) {
            total *= static_cast<std::uint64_t>(p);
            if (total > budget) throw Error("BudgetExceeded", "oracle map enumeration");
        }
        auto id_x = std::find(bx.begin(), bx.end(), c.identity_of(x)) - bx.begin();
        auto id_y = std::find(by.begin(), by.end(), c.identity_of(y)) - by.begin();
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t rem = code;
            ScalarMat mat(m, m, k);
            for (int j = 0; j < m; ++j)
                for (int i = 0; i < m; ++i) {
                    mat.at(i, j) = Scalar::of_int(k, static_cast<long long>(rem % p));
                    rem /= p;
                }
            // unit preservation
            std::vector<Scalar> ex(m, Scalar::zero(k));
            ex[id_x] = Scalar::one(k);
            auto img = mat.apply(ex);
            bool ok = true;
            for (int i = 0; i < m && ok; ++i)
                if (img[i] != (i == id_y ? Scalar::one(k) : Scalar::zero(k))) ok = false;
            if (!ok) continue;
            if (!mat.inverse().has_value()) continue;
            // multiplicativity on basis pairs
            auto apply_to = [&](const LinMorph& f) {
                auto coords = mat.apply(kc.to_vector(f));
                return kc.from_vector(y, y, coords);
            };
            for (int a = 0; a < m && ok; ++a)
                for (int b = 0; b < m && ok; ++b) {
                    LinMorph lhs = apply_to(kc.compose(kc.of_base(bx[a]), kc.of_base(bx[b])));
                    LinMorph rhs = kc.compose(apply_to(kc.of_base(bx[a])), apply_to(kc.of_base(bx[b])));
                    if (!(lhs == rhs)) ok = false;
                }
            if (ok) result.push_back(std::move(mat));
        }
        return result;
    };

    std::map<std::pair<int, int>, std::vector<ScalarMat>> iso_cache;
    auto isos = [&](int x, int y) -> const std::vector<ScalarMat>& {
        auto key = std::make_pair(x, y);
        auto it = iso_cache.find(key);
        if (it == iso_cache.end()) it = iso_cache.emplace(key, algebra_isos(x, y)).first;
        return it->second;
    };

    // functors: object bijections x per-object maps
    struct Functor {
        std::vector<int> sigma;
        std::vector<int> map_index;
    };
    std::vector<Functor> functors;
    for (const auto& sigma : all_perms(n)) {
        bool feasible = true;
        for (int x = 0; x < n && feasible; ++x)
            if (isos(x, sigma[x]).empty()) feasible = false;
        if (!feasible) continue;
        std::vector<int> pick(n, 0);
        while (true) {
            functors.push_back({sigma, pick});
            int q = 0;
            while (q < n && ++pick[q] == static_cast<int>(isos(q, sigma[q]).size())) pick[q++] = 0;
            if (q == n) break;
        }
    }

    // units of each endomorphism algebra
    auto units_of = [&](int x) {
        const auto& bx = c.hom(x, x);
        const int m = static_cast<int>(bx.size());
        std::uint64_t total = 1;
        for (int i = 0; i < m; ++i) total *= static_cast<std::uint64_t>(p);
        std::vector<LinMorph> units;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t rem = code;
            std::vector<Scalar> coords(m);
            for (int i = 0; i < m; ++i) {
                coords[i] = Scalar::of_int(k, static_cast<long long>(rem % p));
                rem /= p;
            }
            LinMorph u = kc.from_vector(x, x, coords);
            // invertibility via the left-multiplication matrix
            ScalarMat lm(m, m, k);
            for (int j = 0; j < m; ++j) {
                auto col = kc.to_vector(kc.compose(u, kc.of_base(bx[j])));
                for (int i = 0; i < m; ++i) lm.at(i, j) = col[i];
            }
            if (lm.inverse().has_value()) units.push_back(std::move(u));
        }
        return units;
    };
    std::vector<std::vector<LinMorph>> units(n);
    for (int x = 0; x < n; ++x) units[x] = units_of(x);

    // natural isomorphism between functors: same sigma, per-object unit with
    // u phi(f) = phi'(f) u
    auto isomorphic = [&](const Functor& f, const Functor& g) -> bool {
        if (f.sigma != g.sigma) return false;
        for (int x = 0; x < n; ++x) {
            const auto& mx = isos(x, f.sigma[x])[f.map_index[x]];
            const auto& my = isos(x, g.sigma[x])[g.map_index[x]];
            bool found = false;
            for (const auto& u : units[f.sigma[x]]) {
                bool ok = true;
                for (int b : c.hom(x, x)) {
                    LinMorph phi = kc.from_vector(f.sigma[x], f.sigma[x], mx.apply(kc.to_vector(kc.of_base(b))));
                    LinMorph psi = kc.from_vector(g.sigma[x], g.sigma[x], my.apply(kc.to_vector(kc.of_base(b))));
                    if (!(kc.compose(u, phi) == kc.compose(psi, u))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    };

    OracleCounts counts;
    counts.functors = functors.size();
    std::vector<int> cls(functors.size(), -1);
    int classes = 0;
    for (size_t i = 0; i < functors.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = classes;
        for (size_t j = i + 1; j < functors.size(); ++j)
            if (cls[j] < 0 && isomorphic(functors[i], functors[j])) cls[j] = classes;
        ++classes;
    }
    counts.pi0 = classes;

    counts.pi1 = 1;
    for (int x = 0; x < n; ++x) {
        unsigned long long central = 0;
        for (const auto& u : units[x]) {
            bool is_central = true;
            for (int b : c.hom(x, x))
                if (!(kc.compose(u, kc.of_base(b)) == kc.compose(kc.of_base(b), u))) is_central = false;
            if (is_central) ++central;
        }
        counts.pi1 *= central;
    }
    return counts;
}

}  // namespace cat2vect
