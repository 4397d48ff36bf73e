#include "cat2vect/vectc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cat2vect {

std::string SeqObject::str(const FinCategory& c) const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        os << c.object_name(entries[i]);
    }
    os << ")";
    return os.str();
}

bool MatMorph::is_zero() const {
    for (const auto& row : cells)
        for (const auto& cell : row)
            if (!cell.is_zero()) return false;
    return true;
}

bool MatMorph::operator==(const MatMorph& o) const {
    return src == o.src && tgt == o.tgt && field == o.field && cells == o.cells;
}

SeqObject VectC::seq(std::vector<int> entries) const {
    for (int x : entries)
        if (x < 0 || x >= cat().num_objects()) throw Error("ShapeMismatch", "sequence entry out of range");
    return SeqObject{std::move(entries)};
}

MatMorph VectC::zero_morph(const SeqObject& src, const SeqObject& tgt) const {
    MatMorph m{src, tgt, field(), {}};
    m.cells.assign(tgt.length(), {});
    for (int i = 0; i < tgt.length(); ++i) {
        m.cells[i].reserve(src.length());
        for (int j = 0; j < src.length(); ++j)
            m.cells[i].push_back(kc_.zero(src.entries[j], tgt.entries[i]));
    }
    return m;
}

MatMorph VectC::identity(const SeqObject& s) const {
    MatMorph m = zero_morph(s, s);
    for (int i = 0; i < s.length(); ++i) m.cells[i][i] = kc_.identity(s.entries[i]);
    return m;
}

MatMorph VectC::permutation(const SeqObject& src, const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != src.length())
        throw Error("ShapeMismatch", "permutation length");
    SeqObject tgt;
    tgt.entries.resize(src.length());
    for (int i = 0; i < src.length(); ++i) tgt.entries[i] = src.entries[perm[i]];
    MatMorph m = zero_morph(src, tgt);
    for (int i = 0; i < src.length(); ++i) m.cells[i][perm[i]] = kc_.identity(src.entries[perm[i]]);
    return m;
}

MatMorph VectC::add(const MatMorph& a, const MatMorph& b) const {
    if (a.src != b.src || a.tgt != b.tgt) throw Error("ShapeMismatch", "matrix sum endpoints");
    MatMorph r = a;
    for (int i = 0; i < a.tgt.length(); ++i)
        for (int j = 0; j < a.src.length(); ++j) r.cells[i][j] = kc_.add(r.cells[i][j], b.cells[i][j]);
    return r;
}

MatMorph VectC::scale(const Scalar& c, const MatMorph& a) const {
    MatMorph r = a;
    for (auto& row : r.cells)
        for (auto& cell : row) cell = kc_.scale(c, cell);
    return r;
}

MatMorph VectC::compose(const MatMorph& b, const MatMorph& a) const {
    if (a.tgt != b.src) throw Error("ShapeMismatch", "matrix composition: src(B) != tgt(A)");
    MatMorph r = zero_morph(a.src, b.tgt);
    for (int i = 0; i < b.tgt.length(); ++i)
        for (int j = 0; j < a.src.length(); ++j) {
            LinMorph acc = kc_.zero(a.src.entries[j], b.tgt.entries[i]);
            for (int k = 0; k < a.tgt.length(); ++k)
                acc = kc_.add(acc, kc_.compose(b.cells[i][k], a.cells[k][j]));
            r.cells[i][j] = acc;
        }
    return r;
}

BiproductDiagram VectC::concat_biproduct(const SeqObject& s, const SeqObject& t) const {
    BiproductDiagram d;
    d.object.entries = s.entries;
    d.object.entries.insert(d.object.entries.end(), t.entries.begin(), t.entries.end());
    MatMorph iota_s = zero_morph(s, d.object), iota_t = zero_morph(t, d.object);
    MatMorph pi_s = zero_morph(d.object, s), pi_t = zero_morph(d.object, t);
    for (int i = 0; i < s.length(); ++i) {
        iota_s.cells[i][i] = kc_.identity(s.entries[i]);
        pi_s.cells[i][i] = kc_.identity(s.entries[i]);
    }
    for (int i = 0; i < t.length(); ++i) {
        iota_t.cells[s.length() + i][i] = kc_.identity(t.entries[i]);
        pi_t.cells[i][s.length() + i] = kc_.identity(t.entries[i]);
    }
    d.injections = {std::move(iota_s), std::move(iota_t)};
    d.projections = {std::move(pi_s), std::move(pi_t)};
    if (!verify_biproduct(d)) throw Error("ShapeMismatch", "concatenation biproduct failed verification");
    return d;
}

bool VectC::verify_biproduct(const BiproductDiagram& d) const {
    if (d.injections.size() != d.projections.size()) return false;
    const size_t n = d.injections.size();
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) {
            MatMorph prod = compose(d.projections[k], d.injections[j]);
            if (k == j) {
                if (prod != identity(d.injections[j].src)) return false;
            } else {
                if (!prod.is_zero()) return false;
            }
        }
    MatMorph acc = zero_morph(d.object, d.object);
    for (size_t k = 0; k < n; ++k) acc = add(acc, compose(d.injections[k], d.projections[k]));
    return acc == identity(d.object);
}

VectC::InvertResult VectC::invert(const MatMorph& a, std::uint64_t) const {
    const SeqObject& s = a.src;
    const SeqObject& t = a.tgt;
    // unknowns: coordinates of B : t -> s over the hom bases of each cell
    struct Slot {
        int i, j, morph;  // cell (i, j) of B, base morphism t_j -> s_i
    };
    std::vector<Slot> slots;
    for (int i = 0; i < s.length(); ++i)
        for (int j = 0; j < t.length(); ++j)
            for (int m : cat().hom(t.entries[j], s.entries[i])) slots.push_back({i, j, m});

    // equations: (A B)[i'][j] = delta_{i'j} id, coordinatized over Hom(t_j, t_i')
    std::vector<int> eq_offset;
    int rows = 0;
    for (int ip = 0; ip < t.length(); ++ip)
        for (int j = 0; j < t.length(); ++j) {
            eq_offset.push_back(rows);
            rows += static_cast<int>(cat().hom(t.entries[j], t.entries[ip]).size());
        }
    ScalarMat m(rows, static_cast<int>(slots.size()), field());
    std::vector<Scalar> rhs(rows, Scalar::zero(field()));
    for (size_t col = 0; col < slots.size(); ++col) {
        const Slot& sl = slots[col];
        for (int ip = 0; ip < t.length(); ++ip) {
            // contribution of B[sl.i][sl.j] = morph to (A B)[ip][sl.j]
            LinMorph contrib = kc_.compose(a.cells[ip][sl.i], kc_.of_base(sl.morph));
            if (contrib.is_zero()) continue;
            int base = eq_offset[ip * t.length() + sl.j];
            auto coords = kc_.to_vector(contrib);
            for (size_t r = 0; r < coords.size(); ++r)
                m.at(base + static_cast<int>(r), static_cast<int>(col)) = coords[r];
        }
    }
    for (int ip = 0; ip < t.length(); ++ip) {
        int base = eq_offset[ip * t.length() + ip];
        auto coords = kc_.to_vector(kc_.identity(t.entries[ip]));
        for (size_t r = 0; r < coords.size(); ++r) rhs[base + static_cast<int>(r)] = coords[r];
    }

    auto sol = solve_linear(m, rhs);
    if (!sol.solvable) return {InvertResult::Status::NotInvertible, std::nullopt};
    // a two-sided inverse is a right inverse, and right inverses of invertible
    // morphisms are unique, so a degenerate solution space rules inversion out
    if (!sol.nullspace.empty()) return {InvertResult::Status::NotInvertible, std::nullopt};
    MatMorph b = zero_morph(t, s);
    for (size_t col = 0; col < slots.size(); ++col) {
        if (sol.particular[col].is_zero()) continue;
        b.cells[slots[col].i][slots[col].j].terms[slots[col].morph] = sol.particular[col];
    }
    if (compose(b, a) != identity(s)) return {InvertResult::Status::NotInvertible, std::nullopt};
    if (compose(a, b) != identity(t)) return {InvertResult::Status::NotInvertible, std::nullopt};
    return {InvertResult::Status::Invertible, std::move(b)};
}

// ---------------------------------------------------------------------------
// structural recognition

bool is_disjoint_union_of_monoids(const FinCategory& c) {
    auto comp = c.object_components();
    std::vector<int> size(c.num_objects(), 0);
    for (int x = 0; x < c.num_objects(); ++x) ++size[comp[x]];
    for (int x = 0; x < c.num_objects(); ++x)
        if (size[comp[x]] != 1) return false;
    return true;
}

namespace {

// monoid tables on {0..n-1} with identity id; isomorphism by backtracking
bool monoids_isomorphic(const FinCategory& c, int x, int y) {
    const auto& hx = c.hom(x, x);
    const auto& hy = c.hom(y, y);
    if (hx.size() != hy.size()) return false;
    const int n = static_cast<int>(hx.size());
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto pos = [&](const std::vector<int>& hom, int m) {
        return static_cast<int>(std::find(hom.begin(), hom.end(), m) - hom.begin());
    };
    int idx = pos(hx, c.identity_of(x)), idy = pos(hy, c.identity_of(y));
    map[idx] = idy;
    used[idy] = true;
    auto consistent = [&](int k) {
        for (int a = 0; a < n; ++a) {
            if (map[a] < 0) continue;
            for (int b = 0; b < n; ++b) {
                if (map[b] < 0 || (a != k && b != k)) continue;
                int ab = pos(hx, c.compose(hx[a], hx[b]));
                if (map[ab] >= 0 && c.compose(hy[map[a]], hy[map[b]]) != hy[map[ab]]) return false;
            }
        }
        return true;
    };
    // the incremental pruning skips pairs whose product is assigned later,
    // so complete maps still need the full homomorphism check
    auto complete = [&]() {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = pos(hx, c.compose(hx[a], hx[b]));
                if (c.compose(hy[map[a]], hy[map[b]]) != hy[map[ab]]) return false;
            }
        return true;
    };
    auto rec = [&](auto&& self, int k) -> bool {
        while (k < n && map[k] >= 0) ++k;
        if (k == n) return complete();
        for (int im = 0; im < n; ++im) {
            if (used[im]) continue;
            map[k] = im;
            used[im] = true;
            if (consistent(k) && self(self, k + 1)) return true;
            used[im] = false;
            map[k] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

bool is_homogeneous(const FinCategory& c) {
    if (!is_disjoint_union_of_monoids(c)) return false;
    for (int x = 1; x < c.num_objects(); ++x)
        if (!monoids_isomorphic(c, 0, x)) return false;
    return true;
}

HomogeneousBasis homogeneous_basis(const FinCategory& c) {
    if (!is_homogeneous(c)) throw Error("NotHomogeneous", "category is not a disjoint union of copies of one monoid");
    HomogeneousBasis b;
    b.representatives.resize(c.num_objects());
    std::iota(b.representatives.begin(), b.representatives.end(), 0);
    b.rank = c.num_objects();
    return b;
}

std::vector<IndecomposabilityVerdict> indecomposable_length_one(const FinCategory& c) {
    bool hyp = mono_implies_iso_check(c);
    std::vector<IndecomposabilityVerdict> out;
    for (int x = 0; x < c.num_objects(); ++x) {
        if (hyp)
            out.push_back({IndecomposabilityVerdict::Kind::Certified,
                           "finite hom-sets and left-cancellable endomorphisms are invertible"});
        else
            out.push_back({IndecomposabilityVerdict::Kind::Unknown,
                           "some left-cancellable endomorphism is not invertible"});
    }
    return out;
}

std::vector<int> kv_canonical_form(const FinCategory& c, const SeqObject& s) {
    for (int x = 0; x < c.num_objects(); ++x)
        if (c.hom(x, x).size() != 1 || !is_disjoint_union_of_monoids(c))
            throw Error("NotDiscrete", "multiplicity vectors need a discrete category");
    std::vector<int> mult(c.num_objects(), 0);
    for (int e : s.entries) ++mult[e];
    return mult;
}

VectC::IsoResult VectC::iso_test(const SeqObject& s, const SeqObject& t, std::uint64_t budget) const {
    if (s == t) return {IsoResult::Status::Iso, identity(s)};

    // permutation of the same multiset of entries
    {
        std::vector<int> a = s.entries, b = t.entries;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a == b) {
            std::vector<int> perm(t.length());
            std::vector<bool> taken(s.length(), false);
            for (int i = 0; i < t.length(); ++i)
                for (int j = 0; j < s.length(); ++j)
                    if (!taken[j] && s.entries[j] == t.entries[i]) {
                        perm[i] = j;
                        taken[j] = true;
                        break;
                    }
            return {IsoResult::Status::Iso, permutation(s, perm)};
        }
    }

    if (is_disjoint_union_of_monoids(cat())) {
        // per-object multiplicities are a complete invariant here
        return {IsoResult::Status::NotIso, std::nullopt};
    }

    if (cat().is_groupoid()) {
        auto comp = cat().object_components();
        int nc = *std::max_element(comp.begin(), comp.end()) + 1;
        std::vector<int> ms(nc, 0), mt(nc, 0);
        for (int e : s.entries) ++ms[comp[e]];
        for (int e : t.entries) ++mt[comp[e]];
        if (ms != mt) return {IsoResult::Status::NotIso, std::nullopt};
        // match entries componentwise and connect with invertible morphisms
        MatMorph w = zero_morph(s, t);
        std::vector<bool> taken(s.length(), false);
        for (int i = 0; i < t.length(); ++i) {
            for (int j = 0; j < s.length(); ++j) {
                if (taken[j] || comp[s.entries[j]] != comp[t.entries[i]]) continue;
                KcIsoResult r = iso_in_kc(kc_, s.entries[j], t.entries[i]);
                if (r.status != KcIsoResult::Status::Iso) continue;
                w.cells[i][j] = *r.witness;
                taken[j] = true;
                break;
            }
        }
        auto inv = invert(w);
        if (inv.status == InvertResult::Status::Invertible) return {IsoResult::Status::Iso, w};
        return {IsoResult::Status::Unknown, std::nullopt};
    }

    // budgeted exhaustive search over a prime field
    if (!field().is_prime_field()) return {IsoResult::Status::Unknown, std::nullopt};
    const long long p = field().characteristic();
    struct Slot {
        int i, j, morph;
    };
    std::vector<Slot> slots;
    for (int i = 0; i < t.length(); ++i)
        for (int j = 0; j < s.length(); ++j)
            for (int m : cat().hom(s.entries[j], t.entries[i])) slots.push_back({i, j, m});
    std::uint64_t total = 1;
    for (size_t i = 0; i < slots.size(); ++i) {
        total *= static_cast<std::uint64_t>(p);
        if (total > budget) return {IsoResult::Status::Unknown, std::nullopt};
    }
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rem = code;
        MatMorph cand = zero_morph(s, t);
        for (const Slot& sl : slots) {
            long long coef = static_cast<long long>(rem % p);
            rem /= p;
            if (coef) cand.cells[sl.i][sl.j].terms[sl.morph] = Scalar::of_int(field(), coef);
        }
        if (invert(cand).status == InvertResult::Status::Invertible)
            return {IsoResult::Status::Iso, cand};
    }
    return {IsoResult::Status::NotIso, std::nullopt};
}

// ---------------------------------------------------------------------------
// structure constants

StructureConstants structure_constants(const FinCategory& c, const FieldSpec& k) {
    StructureConstants sc;
    sc.field = k;
    sc.rank = c.num_objects();
    const int r = sc.rank;
    sc.hom_basis.assign(r, std::vector<std::vector<int>>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            sc.hom_basis[i][j] = c.hom(i, j);
            if (i == j) {
                // identity first
                auto& b = sc.hom_basis[i][j];
                auto it = std::find(b.begin(), b.end(), c.identity_of(i));
                std::rotate(b.begin(), it, it + 1);
            }
        }
    sc.table.assign(r, {});
    for (int i = 0; i < r; ++i) {
        sc.table[i].assign(r, {});
        for (int j = 0; j < r; ++j) {
            sc.table[i][j].assign(r, {});
            for (int kk = 0; kk < r; ++kk) {
                const auto& bij = sc.hom_basis[i][j];
                const auto& bjk = sc.hom_basis[j][kk];
                const auto& bik = sc.hom_basis[i][kk];
                auto& cell = sc.table[i][j][kk];
                cell.assign(bij.size(), std::vector<std::vector<Scalar>>(
                                            bjk.size(), std::vector<Scalar>(bik.size(), Scalar::zero(k))));
                for (size_t a = 0; a < bij.size(); ++a)
                    for (size_t b = 0; b < bjk.size(); ++b) {
                        int comp = c.compose(bjk[b], bij[a]);
                        auto it = std::find(bik.begin(), bik.end(), comp);
                        cell[a][b][it - bik.begin()] = Scalar::one(k);
                    }
            }
        }
    }
    return sc;
}

StructureAxiomReport verify_structure_axioms(const StructureConstants& sc) {
    const int r = sc.rank;
    auto dim = [&](int i, int j) { return static_cast<int>(sc.hom_basis[i][j].size()); };
    // unit conditions
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            for (int a = 0; a < dim(i, j); ++a)
                for (int b = 0; b < dim(i, j); ++b) {
                    Scalar left = sc.c(i, i, j, 0, a, b);
                    Scalar right = sc.c(i, j, j, a, 0, b);
                    Scalar want = a == b ? Scalar::one(sc.field) : Scalar::zero(sc.field);
                    if (left != want)
                        return {false, "unit condition c(i,i,j)_{0a}^b fails at i=" + std::to_string(i) +
                                           " j=" + std::to_string(j) + " a=" + std::to_string(a) +
                                           " b=" + std::to_string(b)};
                    if (right != want)
                        return {false, "unit condition c(i,j,j)_{a0}^b fails at i=" + std::to_string(i) +
                                           " j=" + std::to_string(j) + " a=" + std::to_string(a) +
                                           " b=" + std::to_string(b)};
                }
        }
    // associativity
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l)
                    for (int a = 0; a < dim(i, j); ++a)
                        for (int b = 0; b < dim(j, k); ++b)
                            for (int g = 0; g < dim(k, l); ++g)
                                for (int d = 0; d < dim(i, l); ++d) {
                                    Scalar lhs = Scalar::zero(sc.field);
                                    for (int mu = 0; mu < dim(i, k); ++mu)
                                        lhs = lhs + sc.c(i, j, k, a, b, mu) * sc.c(i, k, l, mu, g, d);
                                    Scalar rhs = Scalar::zero(sc.field);
                                    for (int nu = 0; nu < dim(j, l); ++nu)
                                        rhs = rhs + sc.c(i, j, l, a, nu, d) * sc.c(j, k, l, b, g, nu);
                                    if (lhs != rhs)
                                        return {false, "associativity fails at (i,j,k,l)=(" + std::to_string(i) +
                                                           "," + std::to_string(j) + "," + std::to_string(k) + "," +
                                                           std::to_string(l) + ") (a,b,g,d)=(" + std::to_string(a) +
                                                           "," + std::to_string(b) + "," + std::to_string(g) + "," +
                                                           std::to_string(d) + ")"};
                                }
    return {true, ""};
}

// ---------------------------------------------------------------------------
// kernels

KernelResult kernel_exists(const VectC& v, const LinMorph& a) {
    const FinCategory& c = v.cat();
    if (c.num_objects() != 1 || a.src != 0 || a.tgt != 0)
        throw Error("NotEndomorphismOfStar", "kernel test needs an endomorphism of the unique base object");
    const KCat& kc = v.kcat();
    const auto& basis = c.hom(0, 0);
    ScalarMat left(static_cast<int>(basis.size()), static_cast<int>(basis.size()), v.field());
    for (size_t j = 0; j < basis.size(); ++j) {
        auto col = kc.to_vector(kc.compose(a, kc.of_base(basis[j])));
        for (size_t i = 0; i < basis.size(); ++i) left.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
    }
    bool annihilated = !nullspace(left).empty();
    if (annihilated)
        return {false, "a nonzero right annihilator exists; no monomorphism can equalize it"};
    return {true, "kernel is the zero map from the empty sequence"};
}

// ---------------------------------------------------------------------------
// functor extension

ExtendedFunctor::ExtendedFunctor(const FinCategory& src, VectC target, FunctorAssignment f)
    : src_(src), target_(std::move(target)), assignment_(std::move(f)) {
    if (static_cast<int>(assignment_.on_objects.size()) != src.num_objects() ||
        static_cast<int>(assignment_.on_morphisms.size()) != src.num_morphisms())
        throw Error("NotFunctorial", "assignment sizes do not match the category");
    for (int m = 0; m < src.num_morphisms(); ++m) {
        const auto& mm = src.morph(m);
        const auto& im = assignment_.on_morphisms[m];
        if (im.src != assignment_.on_objects[mm.src] || im.tgt != assignment_.on_objects[mm.tgt])
            throw Error("NotFunctorial", "image endpoints wrong at " + mm.name);
    }
    for (int x = 0; x < src.num_objects(); ++x)
        if (assignment_.on_morphisms[src.identity_of(x)] != target_.identity(assignment_.on_objects[x]))
            throw Error("NotFunctorial", "identity not preserved at " + src.object_name(x));
    for (int g = 0; g < src.num_morphisms(); ++g)
        for (int f2 = 0; f2 < src.num_morphisms(); ++f2) {
            int comp = src.compose(g, f2);
            if (comp < 0) continue;
            if (target_.compose(assignment_.on_morphisms[g], assignment_.on_morphisms[f2]) !=
                assignment_.on_morphisms[comp])
                throw Error("NotFunctorial",
                            "composition not preserved at (" + src.morph(g).name + "," + src.morph(f2).name + ")");
        }
}

SeqObject ExtendedFunctor::apply(const SeqObject& s) const {
    SeqObject out;
    for (int e : s.entries) {
        const auto& img = assignment_.on_objects[e];
        out.entries.insert(out.entries.end(), img.entries.begin(), img.entries.end());
    }
    return out;
}

MatMorph ExtendedFunctor::apply_lin(const LinMorph& f) const {
    MatMorph acc = target_.zero_morph(assignment_.on_objects[f.src], assignment_.on_objects[f.tgt]);
    for (const auto& [m, coef] : f.terms)
        acc = target_.add(acc, target_.scale(coef, assignment_.on_morphisms[m]));
    return acc;
}

MatMorph ExtendedFunctor::apply(const MatMorph& a) const {
    SeqObject src_img = apply(a.src), tgt_img = apply(a.tgt);
    MatMorph out = target_.zero_morph(src_img, tgt_img);
    int row_off = 0;
    for (int i = 0; i < a.tgt.length(); ++i) {
        int col_off = 0;
        int block_rows = static_cast<int>(assignment_.on_objects[a.tgt.entries[i]].length());
        for (int j = 0; j < a.src.length(); ++j) {
            MatMorph block = apply_lin(a.cells[i][j]);
            for (int bi = 0; bi < block.tgt.length(); ++bi)
                for (int bj = 0; bj < block.src.length(); ++bj)
                    out.cells[row_off + bi][col_off + bj] = block.cells[bi][bj];
            col_off += block.src.length();
        }
        row_off += block_rows;
    }
    return out;
}

ExtendedFunctor extend_cat_functor(const FinCategory& c, const FieldSpec& k, const CatFunctor& f) {
    VectC target(c, k);
    FunctorAssignment a;
    for (int x = 0; x < c.num_objects(); ++x) a.on_objects.push_back(SeqObject{{f.obj_map[x]}});
    for (int m = 0; m < c.num_morphisms(); ++m) {
        MatMorph cell = target.zero_morph(a.on_objects[c.morph(m).src], a.on_objects[c.morph(m).tgt]);
        cell.cells[0][0] = target.kcat().of_base(f.mor_map[m]);
        a.on_morphisms.push_back(std::move(cell));
    }
    return ExtendedFunctor(c, std::move(target), std::move(a));
}

MatMorph extend_nat_component(const ExtendedFunctor& fe, const ExtendedFunctor& ge,
                              const CatNatTrans& tau, const SeqObject& s) {
    const VectC& v = fe.target();
    MatMorph out = v.zero_morph(fe.apply(s), ge.apply(s));
    for (int i = 0; i < s.length(); ++i) out.cells[i][i] = v.kcat().of_base(tau.components[s.entries[i]]);
    return out;
}

}  // namespace cat2vect
