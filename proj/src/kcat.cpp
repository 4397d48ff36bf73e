#include "cat2vect/kcat.hpp"

#include <cctype>
#include <sstream>

namespace cat2vect {

Scalar LinMorph::coeff(int morph_id) const {
    auto it = terms.find(morph_id);
    return it == terms.end() ? Scalar::zero(field) : it->second;
}

bool LinMorph::operator==(const LinMorph& o) const {
    return src == o.src && tgt == o.tgt && field == o.field && terms == o.terms;
}

std::string LinMorph::str(const FinCategory& c) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, coef] : terms) {
        if (!first) os << " + ";
        first = false;
        if (!coef.is_one()) os << coef.str() << "*";
        os << c.morph(m).name;
    }
    return os.str();
}

LinMorph KCat::zero(int src, int tgt) const { return LinMorph{src, tgt, field_, {}}; }

LinMorph KCat::identity(int x) const { return of_base(cat_.identity_of(x)); }

LinMorph KCat::of_base(int morph_id, Scalar coeff) const {
    LinMorph f{cat_.morph(morph_id).src, cat_.morph(morph_id).tgt, field_, {}};
    if (!coeff.is_zero()) f.terms[morph_id] = coeff;
    return f;
}

LinMorph KCat::of_base(int morph_id) const { return of_base(morph_id, Scalar::one(field_)); }

LinMorph KCat::add(const LinMorph& f, const LinMorph& g) const {
    if (f.src != g.src || f.tgt != g.tgt)
        throw Error("NotParallel", "sum of morphisms with different endpoints");
    LinMorph r = f;
    for (const auto& [m, c] : g.terms) {
        Scalar s = r.coeff(m) + c;
        if (s.is_zero())
            r.terms.erase(m);
        else
            r.terms[m] = s;
    }
    return r;
}

LinMorph KCat::scale(const Scalar& c, const LinMorph& f) const {
    LinMorph r{f.src, f.tgt, field_, {}};
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : f.terms) r.terms[m] = coef * c;
    return r;
}

LinMorph KCat::compose(const LinMorph& g, const LinMorph& f) const {
    if (f.tgt != g.src) throw Error("NotComposable", "tgt(f) != src(g)");
    LinMorph r = zero(f.src, g.tgt);
    for (const auto& [gm, gc] : g.terms)
        for (const auto& [fm, fc] : f.terms) {
            int h = cat_.compose(gm, fm);
            Scalar s = r.coeff(h) + gc * fc;
            if (s.is_zero())
                r.terms.erase(h);
            else
                r.terms[h] = s;
        }
    return r;
}

std::vector<Scalar> KCat::to_vector(const LinMorph& f) const {
    const auto& basis = cat_.hom(f.src, f.tgt);
    std::vector<Scalar> v(basis.size(), Scalar::zero(field_));
    for (size_t i = 0; i < basis.size(); ++i) v[i] = f.coeff(basis[i]);
    return v;
}

LinMorph KCat::from_vector(int src, int tgt, const std::vector<Scalar>& v) const {
    const auto& basis = cat_.hom(src, tgt);
    if (v.size() != basis.size()) throw Error("ShapeMismatch", "hom-space coordinate size");
    LinMorph f = zero(src, tgt);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!v[i].is_zero()) f.terms[basis[i]] = v[i];
    return f;
}

namespace {

struct SumParser {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    // coefficient: integer or integer/integer
    std::optional<std::pair<long long, long long>> try_number() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            long long num = std::stoll(text.substr(start, pos - start));
            long long den = 1;
            size_t save = pos;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                size_t dstart = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (pos == dstart) throw Error("UsageError", "expected denominator in formal sum");
                den = std::stoll(text.substr(dstart, pos - dstart));
            } else {
                pos = save;
            }
            return std::make_pair(num, den);
        }
        return std::nullopt;
    }

    std::string morph_token() {
        skip_ws();
        if (pos >= text.size()) throw Error("UsageError", "expected morphism id in formal sum");
        if (text[pos] == '(') {
            size_t depth = 0, start = pos;
            while (pos < text.size()) {
                if (text[pos] == '(') ++depth;
                if (text[pos] == ')' && --depth == 0) {
                    ++pos;
                    return text.substr(start, pos - start);
                }
                ++pos;
            }
            throw Error("UsageError", "unbalanced parenthesis in formal sum");
        }
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                                     text[pos] == '.'))
            ++pos;
        if (pos == start) throw Error("UsageError", std::string("unexpected character '") + text[pos] + "'");
        return text.substr(start, pos - start);
    }
};

}  // namespace

LinMorph KCat::parse(const std::string& text) const {
    SumParser p{text};
    LinMorph result;
    bool have_any = false;
    bool negate = false;
    p.skip_ws();
    if (!p.eof() && (text[p.pos] == '+' || text[p.pos] == '-')) {
        negate = text[p.pos] == '-';
        ++p.pos;
    }
    while (!p.eof()) {
        Scalar coeff = Scalar::one(field_);
        if (auto num = p.try_number()) {
            coeff = Scalar::fraction(field_, num->first, num->second);
            p.skip_ws();
            if (p.pos < text.size() && text[p.pos] == '*') ++p.pos;
        }
        std::string tok = p.morph_token();
        auto mid = cat_.find_morphism(tok);
        if (!mid) throw Error("UsageError", "unknown morphism id '" + tok + "'");
        if (negate) coeff = -coeff;
        LinMorph term = of_base(*mid, coeff);
        if (!have_any) {
            result = term;
            have_any = true;
        } else {
            result = add(result, term);
        }
        p.skip_ws();
        if (p.pos >= text.size()) break;
        if (text[p.pos] == '+' || text[p.pos] == '-') {
            negate = text[p.pos] == '-';
            ++p.pos;
        } else {
            throw Error("UsageError", std::string("expected + or - at '") + text[p.pos] + "'");
        }
    }
    if (!have_any) throw Error("UsageError", "empty formal sum");
    return result;
}

// ---------------------------------------------------------------------------

KcIsoResult iso_in_kc(const KCat& kc, int x, int y, std::uint64_t budget) {
    const FinCategory& c = kc.cat();
    if (x == y) return {KcIsoResult::Status::Iso, kc.identity(x), kc.identity(x)};
    for (int m : c.hom(x, y)) {
        int inv = c.inverse_of(m);
        if (inv >= 0) return {KcIsoResult::Status::Iso, kc.of_base(m), kc.of_base(inv)};
    }
    const auto& fwd = c.hom(x, y);
    const auto& bwd = c.hom(y, x);
    if (fwd.empty() || bwd.empty()) return {KcIsoResult::Status::NotIso, std::nullopt, std::nullopt};
    if (!kc.field().is_prime_field()) return {KcIsoResult::Status::Unknown, std::nullopt, std::nullopt};

    const long long p = kc.field().characteristic();
    // candidate count p^|fwd|; enumerate all u, solve v*u = id_x linearly, then
    // check u*v = id_y. Exhaustion without a witness is a definitive negative.
    std::uint64_t total = 1;
    for (size_t i = 0; i < fwd.size(); ++i) {
        total *= static_cast<std::uint64_t>(p);
        if (total > budget) return {KcIsoResult::Status::Unknown, std::nullopt, std::nullopt};
    }
    const auto& idx_basis = c.hom(x, x);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t rem = code;
        LinMorph u = kc.zero(x, y);
        for (size_t i = 0; i < fwd.size(); ++i) {
            long long coef = static_cast<long long>(rem % p);
            rem /= p;
            if (coef) u.terms[fwd[i]] = Scalar::of_int(kc.field(), coef);
        }
        // v*u = id_x is linear in v's coordinates
        ScalarMat a(static_cast<int>(idx_basis.size()), static_cast<int>(bwd.size()), kc.field());
        for (size_t j = 0; j < bwd.size(); ++j) {
            LinMorph col = kc.compose(kc.of_base(bwd[j]), u);
            auto cv = kc.to_vector(col);
            for (size_t r = 0; r < idx_basis.size(); ++r) a.at(static_cast<int>(r), static_cast<int>(j)) = cv[r];
        }
        auto sol = solve_linear(a, kc.to_vector(kc.identity(x)));
        if (!sol.solvable) continue;
        LinMorph v = kc.from_vector(y, x, sol.particular);
        if (kc.compose(u, v) == kc.identity(y)) return {KcIsoResult::Status::Iso, u, v};
    }
    return {KcIsoResult::Status::NotIso, std::nullopt, std::nullopt};
}

bool is_mono(const FinCategory& c, int f) {
    int x = c.morph(f).src;
    for (int w = 0; w < c.num_objects(); ++w) {
        const auto& in = c.hom(w, x);
        for (size_t i = 0; i < in.size(); ++i)
            for (size_t j = i + 1; j < in.size(); ++j)
                if (c.compose(f, in[i]) == c.compose(f, in[j])) return false;
    }
    return true;
}

bool mono_implies_iso_check(const FinCategory& c) {
    for (int x = 0; x < c.num_objects(); ++x)
        for (int f : c.hom(x, x))
            if (is_mono(c, f) && c.inverse_of(f) < 0) return false;
    return true;
}

}  // namespace cat2vect
