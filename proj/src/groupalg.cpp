#include "cat2vect/groupalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace cat2vect {

GroupAlgebra::GroupAlgebra(GroupTable g, FieldSpec k) : group_(std::move(g)), field_(k) {
    if (!field_.is_prime_field()) return;  // Q is allowed for plain arithmetic
    if (group_.order() % field_.characteristic() == 0)
        throw Error("NotSplittingPrime",
                    "characteristic divides the group order; modular case is rejected");
}

GroupAlgebra::Vec GroupAlgebra::one() const { return basis_elem(group_.id); }

GroupAlgebra::Vec GroupAlgebra::basis_elem(int g) const {
    Vec v = zero();
    v[g] = Scalar::one(field_);
    return v;
}

GroupAlgebra::Vec GroupAlgebra::add(const Vec& a, const Vec& b) const {
    Vec r = a;
    for (int i = 0; i < dim(); ++i) r[i] = r[i] + b[i];
    return r;
}

GroupAlgebra::Vec GroupAlgebra::sub(const Vec& a, const Vec& b) const {
    Vec r = a;
    for (int i = 0; i < dim(); ++i) r[i] = r[i] - b[i];
    return r;
}

GroupAlgebra::Vec GroupAlgebra::scale(const Scalar& c, const Vec& a) const {
    Vec r = a;
    for (auto& x : r) x = x * c;
    return r;
}

GroupAlgebra::Vec GroupAlgebra::mul(const Vec& a, const Vec& b) const {
    Vec r = zero();
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            int k = group_.mul[i][j];
            r[k] = r[k] + a[i] * b[j];
        }
    }
    return r;
}

bool GroupAlgebra::is_zero(const Vec& a) const {
    return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

ScalarMat GroupAlgebra::left_mult_matrix(const Vec& a) const {
    ScalarMat m(dim(), dim(), field_);
    for (int j = 0; j < dim(); ++j) {
        Vec col = mul(a, basis_elem(j));
        for (int i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

bool GroupAlgebra::is_central(const Vec& a) const {
    for (int g = 0; g < dim(); ++g) {
        Vec e = basis_elem(g);
        if (mul(a, e) != mul(e, a)) return false;
    }
    return true;
}

std::optional<GroupAlgebra::Vec> GroupAlgebra::inverse(const Vec& a) const {
    auto sol = solve_linear(left_mult_matrix(a), one());
    if (!sol.solvable || !sol.nullspace.empty()) return std::nullopt;
    // one-sided inverses in a finite-dimensional algebra are two-sided
    if (mul(sol.particular, a) != one() || mul(a, sol.particular) != one()) return std::nullopt;
    return sol.particular;
}

std::vector<GroupAlgebra::Vec> GroupAlgebra::class_sums() const {
    std::vector<Vec> out;
    for (const auto& cls : group_.conjugacy_classes()) {
        Vec v = zero();
        for (int g : cls) v[g] = Scalar::one(field_);
        out.push_back(std::move(v));
    }
    return out;
}

std::string GroupAlgebra::str(const Vec& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!a[i].is_one()) os << a[i].str() << "*";
        os << group_.names[i];
    }
    return first ? "0" : os.str();
}

long long splitting_prime(const GroupTable& g, long long start, std::uint64_t budget) {
    long long e = g.exponent();
    long long n = g.order();
    for (long long p = std::max(start, 2LL);; ++p) {
        if (budget-- == 0) throw Error("BudgetExceeded", "splitting prime search budget");
        if (!is_prime(p)) continue;
        if (n % p == 0) continue;
        if ((p - 1) % e != 0) continue;
        return p;
    }
}

// ---------------------------------------------------------------------------
// wedderburn

int WedderburnData::block_index(int degree_class, int p) const {
    int idx = 0;
    for (int i = 0; i < degree_class; ++i) idx += grouping[i].second;
    return idx + p;
}

std::pair<int, int> WedderburnData::class_position(int block) const {
    int i = 0;
    while (block >= grouping[i].second) {
        block -= grouping[i].second;
        ++i;
    }
    return {i, block};
}

namespace {

using Vec = GroupAlgebra::Vec;

// Minimal polynomial of x acting by multiplication in the unital subalgebra
// with unit e (powers e, x, x^2, ... until linear dependence).
Poly minimal_poly(const GroupAlgebra& a, const Vec& e, const Vec& x) {
    std::vector<Vec> powers{e};
    while (true) {
        powers.push_back(a.mul(powers.back(), x));
        int rows = a.dim(), cols = static_cast<int>(powers.size());
        ScalarMat m(rows, cols - 1, a.field());
        for (int j = 0; j + 1 < cols; ++j)
            for (int i = 0; i < rows; ++i) m.at(i, j) = powers[j][i];
        auto sol = solve_linear(m, powers.back());
        if (sol.solvable) {
            Poly p(cols, Scalar::zero(a.field()));
            for (int j = 0; j + 1 < cols; ++j) p[j] = -sol.particular[j];
            p[cols - 1] = Scalar::one(a.field());
            return p;
        }
    }
}

// Evaluate a polynomial at x with e playing the role of the constant term's unit.
Vec poly_eval_in_algebra(const GroupAlgebra& a, const Poly& p, const Vec& e, const Vec& x) {
    Vec acc = a.zero();
    for (int i = poly_deg(p); i >= 0; --i) {
        acc = a.mul(acc, x);
        acc = a.add(acc, a.scale(p[i], e));
    }
    return acc;
}

// Splits e (a central idempotent) with the center element z. Returns the
// eigen-idempotents of e*z when its minimal polynomial has >= 2 roots.
std::vector<Vec> try_split(const GroupAlgebra& a, const Vec& e, const Vec& z) {
    Vec ez = a.mul(e, z);
    Poly m = minimal_poly(a, e, ez);
    if (poly_deg(m) < 2) return {};
    auto fact = poly_factor(m);
    std::vector<Scalar> roots;
    for (const auto& pf : fact.factors) {
        if (poly_deg(pf.factor) != 1) return {};  // does not split linearly on this pick
        if (pf.multiplicity > 1) return {};       // not semisimple on this pick
        roots.push_back(-pf.factor[0]);
    }
    if (roots.size() < 2) return {};
    std::vector<Vec> parts;
    for (const Scalar& lambda : roots) {
        // Lagrange projector onto the lambda eigenspace
        Poly proj{Scalar::one(a.field())};
        Scalar denom = Scalar::one(a.field());
        for (const Scalar& mu : roots) {
            if (mu == lambda) continue;
            proj = poly_mul(proj, Poly{-mu, Scalar::one(a.field())});
            denom = denom * (lambda - mu);
        }
        proj = poly_scale(denom.inverse(), proj);
        parts.push_back(poly_eval_in_algebra(a, proj, e, ez));
    }
    return parts;
}

int dim_of_span(const GroupAlgebra& a, const std::vector<Vec>& vecs) {
    ScalarMat m(a.dim(), static_cast<int>(vecs.size()), a.field());
    for (size_t j = 0; j < vecs.size(); ++j)
        for (int i = 0; i < a.dim(); ++i) m.at(i, static_cast<int>(j)) = vecs[j][i];
    return m.rank();
}

std::vector<long long> scalar_key(const Vec& v) {
    std::vector<long long> key;
    key.reserve(v.size() * 2);
    for (const auto& s : v) {
        key.push_back(s.num());
        key.push_back(s.den());
    }
    return key;
}

}  // namespace

WedderburnData wedderburn(const GroupAlgebra& a, std::uint64_t seed) {
    if (!a.field().is_prime_field())
        throw Error("NotSplittingPrime", "block decomposition runs over a splitting prime field");
    const long long p = a.field().characteristic();
    auto sums = a.class_sums();
    const int classes = static_cast<int>(sums.size());
    std::mt19937_64 rng(seed);

    std::vector<Vec> idem{a.one()};
    auto center_dim_under = [&](const Vec& e) {
        std::vector<Vec> span;
        span.reserve(sums.size());
        for (const auto& z : sums) span.push_back(a.mul(e, z));
        return dim_of_span(a, span);
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i < idem.size(); ++i) {
            if (center_dim_under(idem[i]) <= 1) continue;
            // candidates: a few seeded-random center elements, then the sweep
            std::vector<Vec> candidates;
            for (int t = 0; t < 8; ++t) {
                Vec z = a.zero();
                for (const auto& cs : sums)
                    z = a.add(z, a.scale(Scalar::of_int(a.field(), static_cast<long long>(rng() % p)), cs));
                candidates.push_back(std::move(z));
            }
            for (const auto& cs : sums) candidates.push_back(cs);
            for (int x = 0; x < classes; ++x)
                for (int y = x + 1; y < classes; ++y) candidates.push_back(a.add(sums[x], sums[y]));

            std::vector<Vec> parts;
            for (const auto& z : candidates) {
                parts = try_split(a, idem[i], z);
                if (!parts.empty()) break;
            }
            if (parts.empty())
                throw Error("NotSplittingPrime", "center failed to split; prime is not a splitting prime");
            idem[i] = parts[0];
            for (size_t k = 1; k < parts.size(); ++k) idem.push_back(parts[k]);
            progress = true;
        }
    }

    WedderburnData wd;
    wd.r = static_cast<int>(idem.size());
    if (wd.r != classes)
        throw Error("NotSplittingPrime", "block count does not match the conjugacy class count");

    // invariants: idempotent, central, orthogonal, complete
    Vec total = a.zero();
    for (size_t i = 0; i < idem.size(); ++i) {
        if (a.mul(idem[i], idem[i]) != idem[i]) throw Error("NotSplittingPrime", "non-idempotent block unit");
        if (!a.is_central(idem[i])) throw Error("NotSplittingPrime", "non-central block unit");
        for (size_t j = 0; j < idem.size(); ++j)
            if (i != j && !a.is_zero(a.mul(idem[i], idem[j])))
                throw Error("NotSplittingPrime", "block units are not orthogonal");
        total = a.add(total, idem[i]);
    }
    if (total != a.one()) throw Error("NotSplittingPrime", "block units do not sum to 1");

    std::vector<int> degrees(wd.r);
    for (int i = 0; i < wd.r; ++i) {
        int dim = a.left_mult_matrix(idem[i]).rank();
        int d = 0;
        while (d * d < dim) ++d;
        if (d * d != dim) throw Error("NotSplittingPrime", "block dimension is not a perfect square");
        degrees[i] = d;
    }
    // canonical order: by degree, then by idempotent coefficients
    std::vector<int> order(wd.r);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (degrees[x] != degrees[y]) return degrees[x] < degrees[y];
        return scalar_key(idem[x]) < scalar_key(idem[y]);
    });
    for (int i : order) {
        wd.idempotents.push_back(idem[i]);
        wd.degrees.push_back(degrees[i]);
    }
    int sq = 0;
    for (int d : wd.degrees) sq += d * d;
    if (sq != a.dim()) throw Error("NotSplittingPrime", "degree squares do not sum to |G|");
    for (int d : wd.degrees) {
        if (!wd.grouping.empty() && wd.grouping.back().first == d)
            ++wd.grouping.back().second;
        else
            wd.grouping.emplace_back(d, 1);
    }
    return wd;
}

CenterUnitsReport center_units(const GroupAlgebra& a, const WedderburnData& wd,
                               std::uint64_t enumeration_budget) {
    if (!a.field().is_prime_field())
        throw Error("NotSplittingPrime", "central unit enumeration runs over a prime field");
    CenterUnitsReport rep;
    rep.r = wd.r;
    const long long p = a.field().characteristic();
    auto embed = [&](const std::vector<Scalar>& lambda) {
        Vec v = a.zero();
        for (int i = 0; i < wd.r; ++i) v = a.add(v, a.scale(lambda[i], wd.idempotents[i]));
        return v;
    };

    // multiplicativity and centrality over all tuples when cheap, else sampled
    std::uint64_t tuples = 1;
    bool exhaustive_tuples = true;
    for (int i = 0; i < wd.r; ++i) {
        tuples *= static_cast<std::uint64_t>(p - 1);
        if (tuples > 4096) {
            exhaustive_tuples = false;
            break;
        }
    }
    std::mt19937_64 rng(12345);
    auto random_tuple = [&]() {
        std::vector<Scalar> t(wd.r);
        for (auto& s : t) s = Scalar::of_int(a.field(), 1 + static_cast<long long>(rng() % (p - 1)));
        return t;
    };
    auto tuple_at = [&](std::uint64_t code) {
        std::vector<Scalar> t(wd.r);
        for (int i = 0; i < wd.r; ++i) {
            t[i] = Scalar::of_int(a.field(), 1 + static_cast<long long>(code % (p - 1)));
            code /= (p - 1);
        }
        return t;
    };

    rep.multiplicative = true;
    rep.image_central_units = true;
    std::uint64_t count = exhaustive_tuples ? tuples : 64;
    for (std::uint64_t i = 0; i < count; ++i) {
        auto lam = exhaustive_tuples ? tuple_at(i) : random_tuple();
        auto mu = random_tuple();
        Vec vl = embed(lam), vm = embed(mu);
        if (!a.is_central_unit(vl)) rep.image_central_units = false;
        std::vector<Scalar> prod(wd.r);
        for (int k = 0; k < wd.r; ++k) prod[k] = lam[k] * mu[k];
        if (a.mul(vl, vm) != embed(prod)) rep.multiplicative = false;
    }

    // exhaustive surjectivity for tiny algebras
    std::uint64_t total = 1;
    bool can_enumerate = true;
    for (int i = 0; i < a.dim(); ++i) {
        total *= static_cast<std::uint64_t>(p);
        if (total > enumeration_budget) {
            can_enumerate = false;
            break;
        }
    }
    if (can_enumerate) {
        rep.surjectivity_checked = true;
        std::uint64_t central_units = 0;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t rem = code;
            Vec v = a.zero();
            for (int i = 0; i < a.dim(); ++i) {
                v[i] = Scalar::of_int(a.field(), static_cast<long long>(rem % p));
                rem /= p;
            }
            if (a.is_central_unit(v)) ++central_units;
        }
        std::uint64_t image_size = 1;
        for (int i = 0; i < wd.r; ++i) image_size *= static_cast<std::uint64_t>(p - 1);
        rep.surjective = central_units == image_size;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// automorphisms

AlgAutomorphism AlgAutomorphism::from_matrix(const GroupAlgebra& a, ScalarMat m) {
    if (m.rows() != a.dim() || m.cols() != a.dim())
        throw Error("NotAutomorphism", "matrix shape does not match the algebra");
    if (!m.inverse().has_value()) throw Error("NotAutomorphism", "map is not invertible");
    AlgAutomorphism phi(std::move(m));
    if (phi.apply(a.one()) != a.one()) throw Error("NotAutomorphism", "unit not preserved");
    for (int g = 0; g < a.dim(); ++g)
        for (int h = 0; h < a.dim(); ++h) {
            Vec lhs = phi.apply(a.basis_elem(a.group().mul[g][h]));
            Vec rhs = a.mul(phi.apply(a.basis_elem(g)), phi.apply(a.basis_elem(h)));
            if (lhs != rhs)
                throw Error("NotAutomorphism",
                            "multiplicativity fails at (" + a.group().names[g] + "," + a.group().names[h] + ")");
        }
    return phi;
}

AlgAutomorphism AlgAutomorphism::identity(const GroupAlgebra& a) {
    return AlgAutomorphism(ScalarMat::identity(a.dim(), a.field()));
}

AlgAutomorphism AlgAutomorphism::conjugation_by(const GroupAlgebra& a, const Vec& unit) {
    auto inv = a.inverse(unit);
    if (!inv) throw Error("NotAutomorphism", "conjugation needs a unit");
    ScalarMat m(a.dim(), a.dim(), a.field());
    for (int j = 0; j < a.dim(); ++j) {
        Vec col = a.mul(a.mul(*inv, a.basis_elem(j)), unit);
        for (int i = 0; i < a.dim(); ++i) m.at(i, j) = col[i];
    }
    return AlgAutomorphism(std::move(m));
}

AlgAutomorphism AlgAutomorphism::compose(const AlgAutomorphism& inner_first) const {
    return AlgAutomorphism(mat_ * inner_first.mat_);
}

AlgAutomorphism AlgAutomorphism::inverse() const {
    return AlgAutomorphism(*mat_.inverse());
}

InnerResult is_inner(const GroupAlgebra& a, const AlgAutomorphism& phi, std::uint64_t budget) {
    if (!a.field().is_prime_field())
        throw Error("NotSplittingPrime", "inner/outer classification runs over a prime field");
    const int n = a.dim();
    // u phi(g) = g u for all g, linear in u
    ScalarMat sys(n * n, n, a.field());
    for (int g = 0; g < n; ++g) {
        Vec phig = phi.apply(a.basis_elem(g));
        for (int h = 0; h < n; ++h) {
            Vec diff = a.sub(a.mul(a.basis_elem(h), phig), a.mul(a.basis_elem(g), a.basis_elem(h)));
            for (int i = 0; i < n; ++i) sys.at(g * n + i, h) = diff[i];
        }
    }
    auto basis = nullspace(sys);
    if (basis.empty()) return {InnerResult::Status::Outer, std::nullopt};

    const long long p = a.field().characteristic();
    std::uint64_t total = 1;
    bool exhaustive = true;
    for (size_t i = 0; i < basis.size(); ++i) {
        total *= static_cast<std::uint64_t>(p);
        if (total > budget) {
            exhaustive = false;
            break;
        }
    }
    auto check_unit = [&](const Vec& u) -> std::optional<Vec> {
        if (a.is_unit(u)) return u;
        return std::nullopt;
    };
    if (exhaustive) {
        for (std::uint64_t code = 1; code < total; ++code) {
            std::uint64_t rem = code;
            Vec u = a.zero();
            for (size_t b = 0; b < basis.size(); ++b) {
                long long c = static_cast<long long>(rem % p);
                rem /= p;
                if (c) u = a.add(u, a.scale(Scalar::of_int(a.field(), c), basis[b]));
            }
            if (auto w = check_unit(u)) {
                // exact verification of the conjugation identity
                auto conj = AlgAutomorphism::conjugation_by(a, *w);
                if (conj == phi) return {InnerResult::Status::Inner, w};
            }
        }
        return {InnerResult::Status::Outer, std::nullopt};
    }
    std::mt19937_64 rng(4242);
    for (std::uint64_t t = 0; t < budget; ++t) {
        Vec u = a.zero();
        for (const auto& b : basis)
            u = a.add(u, a.scale(Scalar::of_int(a.field(), static_cast<long long>(rng() % p)), b));
        if (auto w = check_unit(u)) {
            auto conj = AlgAutomorphism::conjugation_by(a, *w);
            if (conj == phi) return {InnerResult::Status::Inner, w};
        }
    }
    return {InnerResult::Status::Undetermined, std::nullopt};
}

// ---------------------------------------------------------------------------
// block structure

BlockStructure::BlockStructure(const GroupAlgebra& a, const WedderburnData& wd) : alg_(&a), wd_(wd) {
    const int n = a.dim();
    center_basis_ = ScalarMat(n, wd.r, a.field());
    for (int j = 0; j < wd.r; ++j)
        for (int i = 0; i < n; ++i) center_basis_.at(i, j) = wd.idempotents[j][i];

    for (int b = 0; b < wd.r; ++b) {
        const Vec& e = wd.idempotents[b];
        const int d = wd.degrees[b];
        const int dim = d * d;
        // greedy basis of e K[G] from the images e*g
        std::vector<Vec> basis;
        ScalarMat probe(n, 0, a.field());
        for (int g = 0; g < n && static_cast<int>(basis.size()) < dim; ++g) {
            Vec cand = a.mul(e, a.basis_elem(g));
            if (a.is_zero(cand)) continue;
            std::vector<Vec> trial = basis;
            trial.push_back(cand);
            if (dim_of_span(a, trial) > static_cast<int>(basis.size())) basis.push_back(cand);
        }
        if (static_cast<int>(basis.size()) != dim)
            throw Error("NotSplittingPrime", "block basis extraction failed");
        block_basis_.push_back(basis);

        // primitive idempotent inside the block
        Vec f = e;
        auto corner_dim = [&](const Vec& fi) {
            std::vector<Vec> span;
            for (const auto& bb : basis) span.push_back(a.mul(a.mul(fi, bb), fi));
            return dim_of_span(a, span);
        };
        std::mt19937_64 rng(20200101);
        int guard = 0;
        while (corner_dim(f) > 1) {
            if (++guard > 512) throw Error("NotSplittingPrime", "primitive idempotent search stalled");
            std::vector<Vec> cands;
            for (const auto& bb : basis) cands.push_back(a.mul(a.mul(f, bb), f));
            for (size_t x = 0; x < basis.size(); ++x)
                for (size_t y = x + 1; y < basis.size(); ++y)
                    cands.push_back(a.mul(a.mul(f, a.add(basis[x], basis[y])), f));
            for (int t = 0; t < 64; ++t) {
                Vec z = a.zero();
                for (const auto& bb : basis)
                    z = a.add(z, a.scale(Scalar::of_int(a.field(),
                                                        static_cast<long long>(rng() % a.field().characteristic())),
                                         bb));
                cands.push_back(a.mul(a.mul(f, z), f));
            }
            bool split = false;
            for (const auto& cand : cands) {
                auto parts = try_split(a, f, cand);
                if (!parts.empty()) {
                    f = parts[0];
                    split = true;
                    break;
                }
            }
            if (!split) throw Error("NotSplittingPrime", "no separating element inside block");
        }

        // module V = (block) * f, a d-dimensional left module
        std::vector<Vec> module;
        for (const auto& bb : basis) {
            Vec cand = a.mul(bb, f);
            if (a.is_zero(cand)) continue;
            std::vector<Vec> trial = module;
            trial.push_back(cand);
            if (dim_of_span(a, trial) > static_cast<int>(module.size())) module.push_back(cand);
            if (static_cast<int>(module.size()) == d) break;
        }
        if (static_cast<int>(module.size()) != d)
            throw Error("NotSplittingPrime", "block module has wrong dimension");

        // coordinates in the module: solve [module] x = v
        ScalarMat module_mat(n, d, a.field());
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < n; ++i) module_mat.at(i, j) = module[j][i];
        auto module_coords = [&](const Vec& v) {
            auto sol = solve_linear(module_mat, v);
            if (!sol.solvable) throw Error("NotSplittingPrime", "module is not invariant");
            return sol.particular;
        };

        // rho: block coordinates -> d x d matrix of the left action on V
        ScalarMat rho(dim, dim, a.field());
        for (int k = 0; k < dim; ++k) {
            for (int j = 0; j < d; ++j) {
                auto col = module_coords(a.mul(basis[k], module[j]));
                for (int i = 0; i < d; ++i) rho.at(i * d + j, k) = col[i];
            }
        }
        auto rho_inv = rho.inverse();
        if (!rho_inv) throw Error("NotSplittingPrime", "block is not a full matrix algebra");
        rho_.push_back(rho);
        rho_inv_.push_back(*rho_inv);
    }
}

std::optional<std::vector<Scalar>> BlockStructure::central_coordinates(const Vec& z) const {
    auto sol = solve_linear(center_basis_, z);
    if (!sol.solvable) return std::nullopt;
    return sol.particular;
}

GroupAlgebra::Vec BlockStructure::from_central_coordinates(const std::vector<Scalar>& lambda) const {
    Vec v = alg_->zero();
    for (int i = 0; i < wd_.r; ++i) v = alg_->add(v, alg_->scale(lambda[i], wd_.idempotents[i]));
    return v;
}

GroupAlgebra::Vec BlockStructure::block_map(int from, int to, const Vec& x) const {
    // x assumed in block `from`; transport through the reference matrix algebra
    const int dim = wd_.degrees[from] * wd_.degrees[from];
    ScalarMat basis_mat(alg_->dim(), dim, alg_->field());
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < alg_->dim(); ++i) basis_mat.at(i, j) = block_basis_[from][j][i];
    auto sol = solve_linear(basis_mat, x);
    if (!sol.solvable) throw Error("NotAutomorphism", "element not in the expected block");
    std::vector<Scalar> flat = rho_[from].apply(sol.particular);
    std::vector<Scalar> coords = rho_inv_[to].apply(flat);
    Vec out = alg_->zero();
    for (int k = 0; k < dim; ++k) out = alg_->add(out, alg_->scale(coords[k], block_basis_[to][k]));
    return out;
}

AlgAutomorphism BlockStructure::permutation_automorphism(const std::vector<std::vector<int>>& sigma) const {
    if (static_cast<int>(sigma.size()) != wd_.num_degree_classes())
        throw Error("DegreeMismatch", "one permutation per degree class required");
    for (int i = 0; i < wd_.num_degree_classes(); ++i) {
        if (static_cast<int>(sigma[i].size()) != wd_.grouping[i].second)
            throw Error("DegreeMismatch", "permutation size does not match the class multiplicity");
        std::vector<bool> seen(sigma[i].size(), false);
        for (int v : sigma[i]) {
            if (v < 0 || v >= static_cast<int>(sigma[i].size()) || seen[v])
                throw Error("DegreeMismatch", "not a permutation");
            seen[v] = true;
        }
    }
    ScalarMat m(alg_->dim(), alg_->dim(), alg_->field());
    for (int j = 0; j < alg_->dim(); ++j) {
        Vec col = alg_->zero();
        for (int b = 0; b < wd_.r; ++b) {
            auto [cls, pos] = wd_.class_position(b);
            int target = wd_.block_index(cls, sigma[cls][pos]);
            Vec piece = alg_->mul(wd_.idempotents[b], alg_->basis_elem(j));
            if (!alg_->is_zero(piece)) col = alg_->add(col, block_map(b, target, piece));
        }
        for (int i = 0; i < alg_->dim(); ++i) m.at(i, j) = col[i];
    }
    return AlgAutomorphism::from_matrix(*alg_, std::move(m));
}

std::vector<int> BlockStructure::idempotent_permutation(const AlgAutomorphism& phi) const {
    std::vector<int> pi(wd_.r, -1);
    for (int b = 0; b < wd_.r; ++b) {
        Vec img = phi.apply(wd_.idempotents[b]);
        for (int t = 0; t < wd_.r; ++t)
            if (img == wd_.idempotents[t]) {
                pi[b] = t;
                break;
            }
        if (pi[b] < 0) throw Error("NotAutomorphism", "image of a block unit is not a block unit");
    }
    return pi;
}

// ---------------------------------------------------------------------------
// outer automorphism group

namespace {

std::vector<std::vector<std::vector<int>>> all_sigma_tuples(const WedderburnData& wd) {
    std::vector<std::vector<std::vector<int>>> per_class;
    for (const auto& [d, k] : wd.grouping) {
        (void)d;
        std::vector<int> base(k);
        std::iota(base.begin(), base.end(), 0);
        std::vector<std::vector<int>> perms;
        do {
            perms.push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));
        per_class.push_back(std::move(perms));
    }
    std::vector<std::vector<std::vector<int>>> tuples{{}};
    for (const auto& perms : per_class) {
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& partial : tuples)
            for (const auto& p : perms) {
                auto ext = partial;
                ext.push_back(p);
                next.push_back(std::move(ext));
            }
        tuples = std::move(next);
    }
    return tuples;
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

}  // namespace

OutGroupPresentation out_group(const GroupAlgebra& a, const WedderburnData& wd,
                               std::uint64_t enumeration_budget) {
    OutGroupPresentation out;
    out.grouping = wd.grouping;
    for (const auto& [d, k] : wd.grouping) {
        (void)d;
        for (int i = 2; i <= k; ++i) out.order *= i;
    }

    BlockStructure bs(a, wd);
    auto tuples = all_sigma_tuples(wd);
    std::vector<AlgAutomorphism> section;
    section.reserve(tuples.size());
    for (const auto& t : tuples) section.push_back(bs.permutation_automorphism(t));
    out.section_is_homomorphism = true;
    for (size_t x = 0; x < tuples.size(); ++x)
        for (size_t y = 0; y < tuples.size(); ++y) {
            std::vector<std::vector<int>> prod;
            for (size_t c = 0; c < tuples[x].size(); ++c)
                prod.push_back(compose_perm(tuples[x][c], tuples[y][c]));
            auto it = std::find(tuples.begin(), tuples.end(), prod);
            if (!(section[x].compose(section[y]) == section[it - tuples.begin()])) {
                out.section_is_homomorphism = false;
            }
        }

    // exhaustive cross-check for tiny algebras
    std::uint64_t total = 1;
    bool can = true;
    for (int i = 0; i < a.dim(); ++i) {
        total *= static_cast<std::uint64_t>(a.field().characteristic());
        if (total > enumeration_budget) {
            can = false;
            break;
        }
    }
    if (can) {
        out.exhaustive_cross_check_ran = true;
        auto autos = enumerate_algebra_automorphisms(a, enumeration_budget);
        // classes modulo inner
        std::vector<int> cls(autos.size(), -1);
        int classes = 0;
        for (size_t i = 0; i < autos.size(); ++i) {
            if (cls[i] >= 0) continue;
            cls[i] = classes;
            for (size_t j = i + 1; j < autos.size(); ++j) {
                if (cls[j] >= 0) continue;
                auto rel = autos[j].compose(autos[i].inverse());
                if (is_inner(a, rel).status == InnerResult::Status::Inner) cls[j] = classes;
            }
            ++classes;
        }
        out.exhaustive_cross_check_ok = classes == out.order;
    }
    return out;
}

std::vector<AlgAutomorphism> enumerate_algebra_automorphisms(const GroupAlgebra& a,
                                                             std::uint64_t budget) {
    if (!a.field().is_prime_field())
        throw Error("BudgetExceeded", "automorphism enumeration needs a finite scalar field");
    const long long p = a.field().characteristic();
    const int n = a.dim();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(p);
        if (total > budget) throw Error("BudgetExceeded", "algebra automorphism enumeration");
    }
    // all units
    std::vector<Vec> units;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rem = code;
        Vec v = a.zero();
        for (int i = 0; i < n; ++i) {
            v[i] = Scalar::of_int(a.field(), static_cast<long long>(rem % p));
            rem /= p;
        }
        if (a.is_unit(v)) units.push_back(std::move(v));
    }
    // greedy generating set of the group
    std::vector<int> gens;
    std::vector<bool> generated(n, false);
    auto regenerate = [&]() {
        std::fill(generated.begin(), generated.end(), false);
        generated[a.group().id] = true;
        bool grow = true;
        while (grow) {
            grow = false;
            for (int g = 0; g < n; ++g) {
                if (!generated[g]) continue;
                for (int s : gens) {
                    if (!generated[a.group().mul[g][s]]) {
                        generated[a.group().mul[g][s]] = true;
                        grow = true;
                    }
                }
            }
        }
    };
    regenerate();
    for (int g = 0; g < n; ++g) {
        if (generated[g]) continue;
        gens.push_back(g);
        regenerate();
    }

    std::vector<AlgAutomorphism> found;
    std::vector<Vec> images(n, a.zero());
    std::vector<bool> assigned(n, false);

    // BFS closure: propagate phi(g s) = phi(g) phi(s); false on inconsistency
    auto close_and_check = [&]() -> bool {
        bool grow = true;
        while (grow) {
            grow = false;
            for (int g = 0; g < n; ++g) {
                if (!assigned[g]) continue;
                for (int s : gens) {
                    if (!assigned[s]) continue;
                    int gs = a.group().mul[g][s];
                    Vec want = a.mul(images[g], images[s]);
                    if (assigned[gs]) {
                        if (images[gs] != want) return false;
                    } else {
                        images[gs] = want;
                        assigned[gs] = true;
                        grow = true;
                    }
                }
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, size_t gi) -> void {
        if (gi == gens.size()) {
            std::vector<Vec> saved = images;
            std::vector<bool> saved_assigned = assigned;
            if (close_and_check() && std::all_of(assigned.begin(), assigned.end(), [](bool b) { return b; })) {
                ScalarMat m(n, n, a.field());
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < n; ++i) m.at(i, j) = images[j][i];
                try {
                    found.push_back(AlgAutomorphism::from_matrix(a, std::move(m)));
                } catch (const Error&) {
                }
            }
            images = std::move(saved);
            assigned = saved_assigned;
            return;
        }
        int g = gens[gi];
        for (const auto& u : units) {
            std::vector<Vec> saved = images;
            std::vector<bool> saved_assigned = assigned;
            images[g] = u;
            assigned[g] = true;
            if (close_and_check()) self(self, gi + 1);
            images = std::move(saved);
            assigned = saved_assigned;
        }
    };
    images[a.group().id] = a.one();
    assigned[a.group().id] = true;
    rec(rec, 0);
    return found;
}

}  // namespace cat2vect
