#include "cat2vect/yoneda.hpp"

#include <algorithm>

namespace cat2vect {

void LinearFunctorData::validate(const FinCategory& c) const {
    if (static_cast<int>(dims.size()) != c.num_objects() ||
        static_cast<int>(on_morph.size()) != c.num_morphisms())
        throw Error("ShapeMismatch", "functor data sizes");
    for (int m = 0; m < c.num_morphisms(); ++m) {
        const auto& mm = c.morph(m);
        if (on_morph[m].rows() != dims[mm.src] || on_morph[m].cols() != dims[mm.tgt])
            throw Error("ShapeMismatch", "contravariant matrix shape at " + mm.name);
    }
    for (int x = 0; x < c.num_objects(); ++x)
        if (on_morph[c.identity_of(x)] != ScalarMat::identity(dims[x], field))
            throw Error("NotFunctorial", "identity image is not the identity matrix");
    for (int g = 0; g < c.num_morphisms(); ++g)
        for (int f = 0; f < c.num_morphisms(); ++f) {
            int gf = c.compose(g, f);
            if (gf < 0) continue;
            if (on_morph[gf] != on_morph[f] * on_morph[g])
                throw Error("NotFunctorial", "contravariance fails at (" + c.morph(g).name + "," +
                                                 c.morph(f).name + ")");
        }
}

LinearFunctorData representable(const FinCategory& c, const FieldSpec& k, int x) {
    LinearFunctorData f;
    f.field = k;
    f.dims.resize(c.num_objects());
    for (int y = 0; y < c.num_objects(); ++y) f.dims[y] = static_cast<int>(c.hom(y, x).size());
    for (int m = 0; m < c.num_morphisms(); ++m) {
        const auto& mm = c.morph(m);
        const auto& src_basis = c.hom(mm.tgt, x);  // F(tgt) has basis Hom(tgt, x)
        const auto& tgt_basis = c.hom(mm.src, x);
        ScalarMat mat(static_cast<int>(tgt_basis.size()), static_cast<int>(src_basis.size()), k);
        for (size_t j = 0; j < src_basis.size(); ++j) {
            int precomposed = c.compose(src_basis[j], m);
            auto it = std::find(tgt_basis.begin(), tgt_basis.end(), precomposed);
            mat.at(static_cast<int>(it - tgt_basis.begin()), static_cast<int>(j)) = Scalar::one(k);
        }
        f.on_morph.push_back(std::move(mat));
    }
    f.validate(c);
    return f;
}

LinearFunctorData functor_biproduct(const FinCategory& c, const std::vector<LinearFunctorData>& parts) {
    LinearFunctorData out;
    out.field = parts.empty() ? FieldSpec::rationals() : parts[0].field;
    out.dims.assign(c.num_objects(), 0);
    for (const auto& p : parts)
        for (int y = 0; y < c.num_objects(); ++y) out.dims[y] += p.dims[y];
    for (int m = 0; m < c.num_morphisms(); ++m) {
        const auto& mm = c.morph(m);
        ScalarMat mat(out.dims[mm.src], out.dims[mm.tgt], out.field);
        int ro = 0, co = 0;
        for (const auto& p : parts) {
            for (int i = 0; i < p.dims[mm.src]; ++i)
                for (int j = 0; j < p.dims[mm.tgt]; ++j) mat.at(ro + i, co + j) = p.on_morph[m].at(i, j);
            ro += p.dims[mm.src];
            co += p.dims[mm.tgt];
        }
        out.on_morph.push_back(std::move(mat));
    }
    return out;
}

std::vector<NatTransData> nat_space(const FinCategory& c, const LinearFunctorData& f,
                                    const LinearFunctorData& g) {
    if (f.field != g.field) throw Error("FieldMismatch", "functors over different fields");
    const FieldSpec k = f.field;
    // unknowns: entries of tau_y (g.dims[y] x f.dims[y]) for all y
    std::vector<int> offset(c.num_objects() + 1, 0);
    for (int y = 0; y < c.num_objects(); ++y) offset[y + 1] = offset[y] + g.dims[y] * f.dims[y];
    const int unknowns = offset.back();
    auto unknown_of = [&](int y, int r, int col) { return offset[y] + r * f.dims[y] + col; };

    int rows = 0;
    std::vector<int> eq_offset;
    for (int m = 0; m < c.num_morphisms(); ++m) {
        const auto& mm = c.morph(m);
        eq_offset.push_back(rows);
        rows += g.dims[mm.src] * f.dims[mm.tgt];
    }
    ScalarMat sys(std::max(rows, 1), unknowns, k);
    for (int m = 0; m < c.num_morphisms(); ++m) {
        const auto& mm = c.morph(m);
        // tau_src o F(m) = G(m) o tau_tgt, an equation in Hom(F(tgt), G(src))
        for (int r = 0; r < g.dims[mm.src]; ++r)
            for (int col = 0; col < f.dims[mm.tgt]; ++col) {
                int row = eq_offset[m] + r * f.dims[mm.tgt] + col;
                for (int t = 0; t < f.dims[mm.src]; ++t)
                    sys.at(row, unknown_of(mm.src, r, t)) =
                        sys.at(row, unknown_of(mm.src, r, t)) + f.on_morph[m].at(t, col);
                for (int t = 0; t < g.dims[mm.tgt]; ++t)
                    sys.at(row, unknown_of(mm.tgt, t, col)) =
                        sys.at(row, unknown_of(mm.tgt, t, col)) - g.on_morph[m].at(r, t);
            }
    }
    std::vector<NatTransData> basis;
    for (const auto& v : nullspace(sys)) {
        NatTransData nt;
        for (int y = 0; y < c.num_objects(); ++y) {
            ScalarMat comp(g.dims[y], f.dims[y], k);
            for (int r = 0; r < g.dims[y]; ++r)
                for (int col = 0; col < f.dims[y]; ++col) comp.at(r, col) = v[unknown_of(y, r, col)];
            nt.components.push_back(std::move(comp));
        }
        basis.push_back(std::move(nt));
    }
    return basis;
}

LinearFunctorData embed_object(const FinCategory& c, const FieldSpec& k, const SeqObject& s) {
    std::vector<LinearFunctorData> parts;
    for (int e : s.entries) parts.push_back(representable(c, k, e));
    if (parts.empty()) {
        LinearFunctorData zero;
        zero.field = k;
        zero.dims.assign(c.num_objects(), 0);
        for (int m = 0; m < c.num_morphisms(); ++m) zero.on_morph.push_back(ScalarMat(0, 0, k));
        return zero;
    }
    return functor_biproduct(c, parts);
}

NatTransData embed_matmorph(const FinCategory& c, const MatMorph& a) {
    const FieldSpec k = a.field;
    NatTransData nt;
    for (int y = 0; y < c.num_objects(); ++y) {
        // block (i, j): K[Hom(y, src_j)] -> K[Hom(y, tgt_i)], postcomposition
        std::vector<int> row_off(a.tgt.length() + 1, 0), col_off(a.src.length() + 1, 0);
        for (int i = 0; i < a.tgt.length(); ++i)
            row_off[i + 1] = row_off[i] + static_cast<int>(c.hom(y, a.tgt.entries[i]).size());
        for (int j = 0; j < a.src.length(); ++j)
            col_off[j + 1] = col_off[j] + static_cast<int>(c.hom(y, a.src.entries[j]).size());
        ScalarMat comp(row_off.back(), col_off.back(), k);
        for (int i = 0; i < a.tgt.length(); ++i)
            for (int j = 0; j < a.src.length(); ++j) {
                const auto& row_basis = c.hom(y, a.tgt.entries[i]);
                const auto& col_basis = c.hom(y, a.src.entries[j]);
                for (const auto& [m, coef] : a.cells[i][j].terms)
                    for (size_t col = 0; col < col_basis.size(); ++col) {
                        int composed = c.compose(m, col_basis[col]);
                        auto it = std::find(row_basis.begin(), row_basis.end(), composed);
                        int r = static_cast<int>(it - row_basis.begin());
                        comp.at(row_off[i] + r, col_off[j] + static_cast<int>(col)) =
                            comp.at(row_off[i] + r, col_off[j] + static_cast<int>(col)) + coef;
                    }
            }
        nt.components.push_back(std::move(comp));
    }
    return nt;
}

FullyFaithfulReport fully_faithful_check(const FinCategory& c, const FieldSpec& k) {
    FullyFaithfulReport report;
    VectC v(c, k);
    for (int x = 0; x < c.num_objects(); ++x) {
        LinearFunctorData fx = representable(c, k, x);
        for (int y = 0; y < c.num_objects(); ++y) {
            LinearFunctorData fy = representable(c, k, y);
            auto basis = nat_space(c, fx, fy);
            FullyFaithfulReport::PairRow row;
            row.x = x;
            row.y = y;
            row.hom_size = static_cast<int>(c.hom(x, y).size());
            row.nat_dim = static_cast<int>(basis.size());
            row.equal = row.hom_size == row.nat_dim;

            // the embedding of the hom basis must stay linearly independent
            std::vector<std::vector<Scalar>> images;
            for (int m : c.hom(x, y)) {
                MatMorph cell = v.zero_morph(SeqObject{{x}}, SeqObject{{y}});
                cell.cells[0][0] = v.kcat().of_base(m);
                NatTransData nt = embed_matmorph(c, cell);
                std::vector<Scalar> flat;
                for (const auto& compm : nt.components)
                    for (int i = 0; i < compm.rows(); ++i)
                        for (int j = 0; j < compm.cols(); ++j) flat.push_back(compm.at(i, j));
                images.push_back(std::move(flat));
            }
            if (images.empty()) {
                row.embedding_is_iso = row.nat_dim == 0;
            } else {
                ScalarMat img(static_cast<int>(images[0].size()), static_cast<int>(images.size()), k);
                for (size_t j = 0; j < images.size(); ++j)
                    for (size_t i = 0; i < images[j].size(); ++i)
                        img.at(static_cast<int>(i), static_cast<int>(j)) = images[j][i];
                row.embedding_is_iso =
                    img.rank() == row.hom_size && row.equal;  // injective onto a space of equal dimension
            }
            if (!row.equal || !row.embedding_is_iso) report.passed = false;
            report.pairs.push_back(row);
        }
    }

    // sampled longer sequences: dimensions add over entry pairs
    std::vector<SeqObject> samples = {SeqObject{{0, 0}}};
    if (c.num_objects() >= 2) samples.push_back(SeqObject{{0, 1}});
    for (const auto& s : samples)
        for (const auto& t : samples) {
            int expected = 0;
            for (int i : s.entries)
                for (int j : t.entries) expected += static_cast<int>(c.hom(i, j).size());
            auto basis = nat_space(c, embed_object(c, k, s), embed_object(c, k, t));
            if (static_cast<int>(basis.size()) != expected) report.passed = false;
        }
    return report;
}

}  // namespace cat2vect
