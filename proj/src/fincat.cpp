#include "cat2vect/fincat.hpp"

#include <algorithm>
#include <numeric>

namespace cat2vect {

FinCategory FinCategory::validate(const RawCategory& raw) {
    FinCategory c;
    c.name_ = raw.name;
    c.object_names_ = raw.objects;
    const int no = static_cast<int>(raw.objects.size());
    const int nm = static_cast<int>(raw.morphisms.size());
    c.morphisms_.reserve(nm);
    for (const auto& rm : raw.morphisms) {
        if (rm.src < 0 || rm.src >= no || rm.tgt < 0 || rm.tgt >= no)
            throw Error("SrcTgtMismatch", "morphism " + rm.id + " has out-of-range endpoints");
        c.morphisms_.push_back({rm.id, rm.src, rm.tgt});
    }
    if (static_cast<int>(raw.identity.size()) != no)
        throw Error("MissingIdentity", "identity map must cover every object");
    c.identity_ = raw.identity;
    for (int x = 0; x < no; ++x) {
        int m = c.identity_[x];
        if (m < 0 || m >= nm) throw Error("MissingIdentity", "object " + raw.objects[x]);
        if (c.morphisms_[m].src != x || c.morphisms_[m].tgt != x)
            throw Error("MissingIdentity", "identity of " + raw.objects[x] + " is not an endomorphism");
    }

    c.comp_.assign(nm, std::vector<int>(nm, -1));
    for (const auto& t : raw.comp) {
        int g = t[0], f = t[1], r = t[2];
        if (g < 0 || g >= nm || f < 0 || f >= nm || r < 0 || r >= nm)
            throw Error("UndefinedComposite", "composition entry out of range");
        if (c.morphisms_[f].tgt != c.morphisms_[g].src)
            throw Error("SrcTgtMismatch", "comp(" + c.morphisms_[g].name + "," + c.morphisms_[f].name +
                                              ") given for a non-composable pair");
        if (c.morphisms_[r].src != c.morphisms_[f].src || c.morphisms_[r].tgt != c.morphisms_[g].tgt)
            throw Error("SrcTgtMismatch", "comp(" + c.morphisms_[g].name + "," + c.morphisms_[f].name +
                                              ") has wrong endpoints");
        c.comp_[g][f] = r;
    }
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            bool composable = c.morphisms_[f].tgt == c.morphisms_[g].src;
            if (composable && c.comp_[g][f] < 0)
                throw Error("UndefinedComposite",
                            "comp(" + c.morphisms_[g].name + "," + c.morphisms_[f].name + ") missing");
        }
    for (int f = 0; f < nm; ++f) {
        if (c.comp_[c.identity_[c.morphisms_[f].tgt]][f] != f ||
            c.comp_[f][c.identity_[c.morphisms_[f].src]] != f)
            throw Error("MissingIdentity", "unit law fails at " + c.morphisms_[f].name);
    }
    for (int h = 0; h < nm; ++h)
        for (int g = 0; g < nm; ++g) {
            if (c.morphisms_[g].tgt != c.morphisms_[h].src) continue;
            for (int f = 0; f < nm; ++f) {
                if (c.morphisms_[f].tgt != c.morphisms_[g].src) continue;
                if (c.comp_[c.comp_[h][g]][f] != c.comp_[h][c.comp_[g][f]])
                    throw Error("AssociativityViolation", "(" + c.morphisms_[f].name + "," +
                                                              c.morphisms_[g].name + "," + c.morphisms_[h].name + ")");
            }
        }

    c.hom_.assign(no, std::vector<std::vector<int>>(no));
    for (int m = 0; m < nm; ++m) c.hom_[c.morphisms_[m].src][c.morphisms_[m].tgt].push_back(m);
    return c;
}

std::optional<int> FinCategory::find_object(const std::string& name) const {
    for (int i = 0; i < num_objects(); ++i)
        if (object_names_[i] == name) return i;
    return std::nullopt;
}

std::optional<int> FinCategory::find_morphism(const std::string& name) const {
    for (int i = 0; i < num_morphisms(); ++i)
        if (morphisms_[i].name == name) return i;
    return std::nullopt;
}

int FinCategory::inverse_of(int m) const {
    const auto& mm = morphisms_[m];
    for (int g : hom_[mm.tgt][mm.src])
        if (comp_[g][m] == identity_[mm.src] && comp_[m][g] == identity_[mm.tgt]) return g;
    return -1;
}

bool FinCategory::is_groupoid() const {
    for (int m = 0; m < num_morphisms(); ++m)
        if (inverse_of(m) < 0) return false;
    return true;
}

std::vector<int> FinCategory::object_components() const {
    std::vector<int> parent(num_objects());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& m : morphisms_) {
        int a = find(m.src), b = find(m.tgt);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> comp(num_objects());
    std::vector<int> label(num_objects(), -1);
    int next = 0;
    for (int x = 0; x < num_objects(); ++x) {
        int r = find(x);
        if (label[r] < 0) label[r] = next++;
        comp[x] = label[r];
    }
    return comp;
}

RawCategory FinCategory::to_raw() const {
    RawCategory raw;
    raw.name = name_;
    raw.objects = object_names_;
    for (const auto& m : morphisms_) raw.morphisms.push_back({m.name, m.src, m.tgt});
    raw.identity = identity_;
    for (int g = 0; g < num_morphisms(); ++g)
        for (int f = 0; f < num_morphisms(); ++f)
            if (comp_[g][f] >= 0) raw.comp.push_back({g, f, comp_[g][f]});
    return raw;
}

FinCategory FinCategory::discrete(int n) {
    RawCategory raw;
    raw.name = "discrete" + std::to_string(n);
    for (int i = 0; i < n; ++i) {
        raw.objects.push_back("x" + std::to_string(i));
        raw.morphisms.push_back({"id_x" + std::to_string(i), i, i});
        raw.identity.push_back(i);
        raw.comp.push_back({i, i, i});
    }
    return validate(raw);
}

FinCategory FinCategory::monoid_cat(const MonoidTable& m) {
    RawCategory raw;
    raw.name = "monoid";
    raw.objects = {"*"};
    for (int i = 0; i < m.order(); ++i) raw.morphisms.push_back({m.names[i], 0, 0});
    raw.identity = {m.id};
    for (int a = 0; a < m.order(); ++a)
        for (int b = 0; b < m.order(); ++b) raw.comp.push_back({a, b, m.mul[a][b]});
    return validate(raw);
}

FinCategory FinCategory::group_cat(const GroupTable& g) { return monoid_cat(g.as_monoid()); }

FinCategory FinCategory::disjoint_union(const std::vector<FinCategory>& parts) {
    RawCategory raw;
    raw.name = "disjoint_union";
    std::vector<int> obj_off, mor_off;
    int oo = 0, mo = 0;
    for (const auto& p : parts) {
        obj_off.push_back(oo);
        mor_off.push_back(mo);
        oo += p.num_objects();
        mo += p.num_morphisms();
    }
    for (size_t k = 0; k < parts.size(); ++k) {
        const auto& p = parts[k];
        std::string tag = "c" + std::to_string(k) + ".";
        for (int x = 0; x < p.num_objects(); ++x) raw.objects.push_back(tag + p.object_name(x));
        for (int m = 0; m < p.num_morphisms(); ++m)
            raw.morphisms.push_back({tag + p.morph(m).name, obj_off[k] + p.morph(m).src, obj_off[k] + p.morph(m).tgt});
        for (int x = 0; x < p.num_objects(); ++x) raw.identity.push_back(mor_off[k] + p.identity_of(x));
        for (int g = 0; g < p.num_morphisms(); ++g)
            for (int f = 0; f < p.num_morphisms(); ++f)
                if (p.compose(g, f) >= 0)
                    raw.comp.push_back({mor_off[k] + g, mor_off[k] + f, mor_off[k] + p.compose(g, f)});
    }
    return validate(raw);
}

FinCategory FinCategory::homogeneous_groupoid(int n, const GroupTable& g) {
    if (n < 0) throw Error("InvalidAlgebraTable", "component count must be nonnegative");
    std::vector<FinCategory> parts(static_cast<size_t>(n), group_cat(g));
    return disjoint_union(parts);
}

// ---------------------------------------------------------------------------
// functors and natural transformations

CatFunctor CatFunctor::checked(const FinCategory& src, const FinCategory& tgt, std::vector<int> obj_map,
                               std::vector<int> mor_map) {
    if (static_cast<int>(obj_map.size()) != src.num_objects() ||
        static_cast<int>(mor_map.size()) != src.num_morphisms())
        throw Error("NotFunctorial", "map sizes do not match the category");
    for (int m = 0; m < src.num_morphisms(); ++m) {
        const auto& mm = src.morph(m);
        const auto& im = tgt.morph(mor_map[m]);
        if (im.src != obj_map[mm.src] || im.tgt != obj_map[mm.tgt])
            throw Error("NotFunctorial", "src/tgt not preserved at " + mm.name);
    }
    for (int x = 0; x < src.num_objects(); ++x)
        if (mor_map[src.identity_of(x)] != tgt.identity_of(obj_map[x]))
            throw Error("NotFunctorial", "identity not preserved at object " + src.object_name(x));
    for (int g = 0; g < src.num_morphisms(); ++g)
        for (int f = 0; f < src.num_morphisms(); ++f) {
            int c = src.compose(g, f);
            if (c < 0) continue;
            if (tgt.compose(mor_map[g], mor_map[f]) != mor_map[c])
                throw Error("NotFunctorial",
                            "composition not preserved at (" + src.morph(g).name + "," + src.morph(f).name + ")");
        }
    return CatFunctor{std::move(obj_map), std::move(mor_map)};
}

CatFunctor CatFunctor::identity(const FinCategory& c) {
    CatFunctor f;
    f.obj_map.resize(c.num_objects());
    f.mor_map.resize(c.num_morphisms());
    std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
    std::iota(f.mor_map.begin(), f.mor_map.end(), 0);
    return f;
}

CatFunctor CatFunctor::compose(const FinCategory& c, const CatFunctor& g, const CatFunctor& f) {
    CatFunctor r;
    r.obj_map.resize(c.num_objects());
    r.mor_map.resize(c.num_morphisms());
    for (int x = 0; x < c.num_objects(); ++x) r.obj_map[x] = g.obj_map[f.obj_map[x]];
    for (int m = 0; m < c.num_morphisms(); ++m) r.mor_map[m] = g.mor_map[f.mor_map[m]];
    return r;
}

bool is_natural(const FinCategory& c, const CatFunctor& f, const CatFunctor& g, const CatNatTrans& tau) {
    for (int m = 0; m < c.num_morphisms(); ++m) {
        const auto& mm = c.morph(m);
        int lhs = c.compose(tau.components[mm.tgt], f.mor_map[m]);
        int rhs = c.compose(g.mor_map[m], tau.components[mm.src]);
        if (lhs < 0 || lhs != rhs) return false;
    }
    return true;
}

std::vector<CatNatTrans> natural_isos(const FinCategory& c, const CatFunctor& f, const CatFunctor& g) {
    std::vector<CatNatTrans> result;
    std::vector<int> comp(c.num_objects(), -1);
    // candidates per object: invertible morphisms f(x) -> g(x)
    std::vector<std::vector<int>> cands(c.num_objects());
    for (int x = 0; x < c.num_objects(); ++x)
        for (int m : c.hom(f.obj_map[x], g.obj_map[x]))
            if (c.inverse_of(m) >= 0) cands[x].push_back(m);

    auto consistent = [&](int x) {
        for (int m = 0; m < c.num_morphisms(); ++m) {
            const auto& mm = c.morph(m);
            if (comp[mm.src] < 0 || comp[mm.tgt] < 0) continue;
            if (mm.src != x && mm.tgt != x) continue;
            if (c.compose(comp[mm.tgt], f.mor_map[m]) != c.compose(g.mor_map[m], comp[mm.src])) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int x) -> void {
        if (x == c.num_objects()) {
            result.push_back(CatNatTrans{comp});
            return;
        }
        for (int m : cands[x]) {
            comp[x] = m;
            if (consistent(x)) self(self, x + 1);
            comp[x] = -1;
        }
    };
    rec(rec, 0);
    return result;
}

// ---------------------------------------------------------------------------
// equivalence enumeration

namespace {

// Full subcategory on one least representative per object iso class.
FinCategory skeletalize(const FinCategory& c) {
    std::vector<int> rep(c.num_objects());
    std::iota(rep.begin(), rep.end(), 0);
    for (int x = 0; x < c.num_objects(); ++x)
        for (int y = 0; y < x; ++y) {
            if (rep[y] != y) continue;
            for (int m : c.hom(x, y))
                if (c.inverse_of(m) >= 0) {
                    rep[x] = y;
                    break;
                }
            if (rep[x] != x) break;
        }
    bool already = true;
    for (int x = 0; x < c.num_objects(); ++x) already = already && rep[x] == x;
    if (already) return c;

    RawCategory raw;
    raw.name = c.name() + ".skeleton";
    std::vector<int> new_obj(c.num_objects(), -1), new_mor(c.num_morphisms(), -1);
    for (int x = 0; x < c.num_objects(); ++x)
        if (rep[x] == x) {
            new_obj[x] = static_cast<int>(raw.objects.size());
            raw.objects.push_back(c.object_name(x));
        }
    for (int m = 0; m < c.num_morphisms(); ++m) {
        const auto& mm = c.morph(m);
        if (new_obj[mm.src] < 0 || new_obj[mm.tgt] < 0) continue;
        new_mor[m] = static_cast<int>(raw.morphisms.size());
        raw.morphisms.push_back({mm.name, new_obj[mm.src], new_obj[mm.tgt]});
    }
    for (int x = 0; x < c.num_objects(); ++x)
        if (rep[x] == x) raw.identity.push_back(new_mor[c.identity_of(x)]);
    for (int g = 0; g < c.num_morphisms(); ++g)
        for (int f = 0; f < c.num_morphisms(); ++f) {
            int r = c.compose(g, f);
            if (r < 0 || new_mor[g] < 0 || new_mor[f] < 0) continue;
            raw.comp.push_back({new_mor[g], new_mor[f], new_mor[r]});
        }
    return FinCategory::validate(raw);
}

struct AutoSearch {
    const FinCategory& c;
    std::uint64_t budget;
    std::uint64_t used = 0;
    std::vector<CatFunctor> found;

    void tick() {
        if (++used > budget) throw Error("BudgetExceeded", "equivalence enumeration budget exhausted");
    }

    void run() {
        std::vector<int> obj(c.num_objects(), -1);
        std::vector<bool> taken(c.num_objects(), false);
        place_object(0, obj, taken);
    }

    void place_object(int x, std::vector<int>& obj, std::vector<bool>& taken) {
        if (x == c.num_objects()) {
            assign_morphisms(obj);
            return;
        }
        for (int y = 0; y < c.num_objects(); ++y) {
            if (taken[y]) continue;
            tick();
            // hom-set cardinalities must match against every placed object
            bool ok = c.hom(x, x).size() == c.hom(y, y).size();
            for (int z = 0; ok && z < x; ++z) {
                ok = c.hom(x, z).size() == c.hom(y, obj[z]).size() &&
                     c.hom(z, x).size() == c.hom(obj[z], y).size();
            }
            if (!ok) continue;
            obj[x] = y;
            taken[y] = true;
            place_object(x + 1, obj, taken);
            taken[y] = false;
            obj[x] = -1;
        }
    }

    void assign_morphisms(const std::vector<int>& obj) {
        std::vector<int> mor(c.num_morphisms(), -1);
        std::vector<bool> used_m(c.num_morphisms(), false);
        for (int x = 0; x < c.num_objects(); ++x) {
            mor[c.identity_of(x)] = c.identity_of(obj[x]);
            used_m[c.identity_of(obj[x])] = true;
        }
        place_morphism(0, obj, mor, used_m);
    }

    void place_morphism(int m, const std::vector<int>& obj, std::vector<int>& mor, std::vector<bool>& used_m) {
        while (m < c.num_morphisms() && mor[m] >= 0) ++m;
        if (m == c.num_morphisms()) {
            try {
                found.push_back(CatFunctor::checked(c, c, obj, mor));
            } catch (const Error&) {
            }
            return;
        }
        const auto& mm = c.morph(m);
        for (int img : c.hom(obj[mm.src], obj[mm.tgt])) {
            if (used_m[img]) continue;
            tick();
            mor[m] = img;
            if (compositions_consistent(m, mor)) {
                used_m[img] = true;
                place_morphism(m + 1, obj, mor, used_m);
                used_m[img] = false;
            }
            mor[m] = -1;
        }
    }

    bool compositions_consistent(int m, const std::vector<int>& mor) const {
        for (int f = 0; f < c.num_morphisms(); ++f) {
            if (mor[f] < 0) continue;
            int gf = c.compose(m, f);
            if (gf >= 0 && mor[gf] >= 0 && c.compose(mor[m], mor[f]) != mor[gf]) return false;
            int fg = c.compose(f, m);
            if (fg >= 0 && mor[fg] >= 0 && c.compose(mor[f], mor[m]) != mor[fg]) return false;
        }
        int mm2 = c.compose(m, m);
        if (mm2 >= 0 && mor[mm2] >= 0 && c.compose(mor[m], mor[m]) != mor[mm2]) return false;
        return true;
    }
};

}  // namespace

EquivEnumeration enumerate_equivalences(const FinCategory& input, std::uint64_t budget) {
    EquivEnumeration e;
    e.skeleton = skeletalize(input);
    const FinCategory& c = e.skeleton;
    AutoSearch search{c, budget, 0, {}};
    search.run();
    e.functors = std::move(search.found);

    // iso classes
    const int nf = static_cast<int>(e.functors.size());
    e.iso_class.assign(nf, -1);
    int classes = 0;
    for (int i = 0; i < nf; ++i) {
        if (e.iso_class[i] >= 0) continue;
        e.iso_class[i] = classes;
        for (int j = i + 1; j < nf; ++j) {
            if (e.iso_class[j] >= 0) continue;
            if (!natural_isos(c, e.functors[i], e.functors[j]).empty()) e.iso_class[j] = classes;
        }
        ++classes;
    }
    e.pi0_order = classes;

    // class representatives and composition table
    std::vector<int> rep(classes, -1);
    for (int i = 0; i < nf; ++i)
        if (rep[e.iso_class[i]] < 0) rep[e.iso_class[i]] = i;
    e.pi0_table.assign(classes, std::vector<int>(classes, -1));
    for (int a = 0; a < classes; ++a)
        for (int b = 0; b < classes; ++b) {
            CatFunctor comp = CatFunctor::compose(c, e.functors[rep[a]], e.functors[rep[b]]);
            for (int i = 0; i < nf; ++i)
                if (e.functors[i] == comp) {
                    e.pi0_table[a][b] = e.iso_class[i];
                    break;
                }
            if (e.pi0_table[a][b] < 0) throw Error("BudgetExceeded", "composite automorphism not in search set");
        }

    e.pi1_elements = natural_isos(c, CatFunctor::identity(c), CatFunctor::identity(c));
    e.pi1_order = static_cast<int>(e.pi1_elements.size());
    return e;
}

}  // namespace cat2vect
