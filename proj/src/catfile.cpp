#include "cat2vect/catfile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cat2vect {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error("UsageError", std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("UsageError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

FinCategory parse_category_file(const std::string& text) {
    ordered_json j = parse_json(text);
    RawCategory raw;
    try {
        raw.name = j.value("name", "");
        for (const auto& o : j.at("objects")) raw.objects.push_back(o.get<std::string>());
        auto obj_index = [&](const std::string& name) {
            for (size_t i = 0; i < raw.objects.size(); ++i)
                if (raw.objects[i] == name) return static_cast<int>(i);
            throw Error("UsageError", "unknown object '" + name + "'");
        };
        for (const auto& m : j.at("morphisms"))
            raw.morphisms.push_back({m.at("id").get<std::string>(), obj_index(m.at("src").get<std::string>()),
                                     obj_index(m.at("tgt").get<std::string>())});
        auto morph_index = [&](const std::string& name) {
            for (size_t i = 0; i < raw.morphisms.size(); ++i)
                if (raw.morphisms[i].id == name) return static_cast<int>(i);
            throw Error("UsageError", "unknown morphism '" + name + "'");
        };
        raw.identity.assign(raw.objects.size(), -1);
        for (const auto& [obj, morph] : j.at("identities").items())
            raw.identity[obj_index(obj)] = morph_index(morph.get<std::string>());
        for (int id : raw.identity)
            if (id < 0) throw Error("MissingIdentity", "identities must cover every object");
        for (const auto& entry : j.at("comp"))
            raw.comp.push_back({morph_index(entry.at("g").get<std::string>()),
                                morph_index(entry.at("f").get<std::string>()),
                                morph_index(entry.at("result").get<std::string>())});
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error("UsageError", std::string("bad category document: ") + e.what());
    }
    // duplicate ids are input errors
    for (size_t i = 0; i < raw.objects.size(); ++i)
        for (size_t k = i + 1; k < raw.objects.size(); ++k)
            if (raw.objects[i] == raw.objects[k]) throw Error("UsageError", "duplicate object id");
    for (size_t i = 0; i < raw.morphisms.size(); ++i)
        for (size_t k = i + 1; k < raw.morphisms.size(); ++k)
            if (raw.morphisms[i].id == raw.morphisms[k].id)
                throw Error("UsageError", "duplicate morphism id");
    return FinCategory::validate(raw);
}

std::string serialize_category(const FinCategory& c) {
    ordered_json j;
    j["name"] = c.name();
    j["objects"] = ordered_json::array();
    for (int x = 0; x < c.num_objects(); ++x) j["objects"].push_back(c.object_name(x));
    j["morphisms"] = ordered_json::array();
    for (int m = 0; m < c.num_morphisms(); ++m) {
        ordered_json mj;
        mj["id"] = c.morph(m).name;
        mj["src"] = c.object_name(c.morph(m).src);
        mj["tgt"] = c.object_name(c.morph(m).tgt);
        j["morphisms"].push_back(std::move(mj));
    }
    j["identities"] = ordered_json::object();
    for (int x = 0; x < c.num_objects(); ++x)
        j["identities"][c.object_name(x)] = c.morph(c.identity_of(x)).name;
    j["comp"] = ordered_json::array();
    for (int g = 0; g < c.num_morphisms(); ++g)
        for (int f = 0; f < c.num_morphisms(); ++f) {
            if (c.compose(g, f) < 0) continue;
            ordered_json e;
            e["g"] = c.morph(g).name;
            e["f"] = c.morph(f).name;
            e["result"] = c.morph(c.compose(g, f)).name;
            j["comp"].push_back(std::move(e));
        }
    return j.dump(2) + "\n";
}

FinCategory load_category_file(const std::string& path) {
    return parse_category_file(read_file(path));
}

void write_category_file(const std::string& path, const FinCategory& c) {
    std::ofstream out(path);
    if (!out) throw Error("UsageError", "cannot write " + path);
    out << serialize_category(c);
}

GroupTable group_from_category(const FinCategory& c) {
    if (c.num_objects() != 1)
        throw Error("UsageError", "group input must be a one-object category");
    std::vector<std::string> names;
    for (int m = 0; m < c.num_morphisms(); ++m) names.push_back(c.morph(m).name);
    std::vector<std::vector<int>> mul(c.num_morphisms(), std::vector<int>(c.num_morphisms()));
    for (int a = 0; a < c.num_morphisms(); ++a)
        for (int b = 0; b < c.num_morphisms(); ++b) mul[a][b] = c.compose(a, b);
    return GroupTable::from_table(std::move(names), std::move(mul));
}

MatMorph parse_matmorph(const VectC& v, const std::string& text) {
    ordered_json j = parse_json(text);
    const FinCategory& c = v.cat();
    auto seq_of = [&](const ordered_json& arr) {
        std::vector<int> entries;
        for (const auto& o : arr) {
            auto idx = c.find_object(o.get<std::string>());
            if (!idx) throw Error("UsageError", "unknown object '" + o.get<std::string>() + "'");
            entries.push_back(*idx);
        }
        return v.seq(entries);
    };
    try {
        SeqObject src = seq_of(j.at("src"));
        SeqObject tgt = seq_of(j.at("tgt"));
        MatMorph m = v.zero_morph(src, tgt);
        const auto& cells = j.at("cells");
        if (static_cast<int>(cells.size()) != tgt.length())
            throw Error("UsageError", "cells must have one row per target entry");
        for (int i = 0; i < tgt.length(); ++i) {
            if (static_cast<int>(cells[i].size()) != src.length())
                throw Error("UsageError", "cells row width must match the source length");
            for (int jj = 0; jj < src.length(); ++jj)
                for (const auto& [name, coeff] : cells[i][jj].items()) {
                    auto mid = c.find_morphism(name);
                    if (!mid) throw Error("UsageError", "unknown morphism '" + name + "'");
                    Scalar s = Scalar::parse(v.field(), coeff.get<std::string>());
                    if (c.morph(*mid).src != src.entries[jj] || c.morph(*mid).tgt != tgt.entries[i])
                        throw Error("UsageError", "cell morphism endpoints do not match the cell");
                    if (!s.is_zero()) m.cells[i][jj].terms[*mid] = s;
                }
        }
        return m;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error("UsageError", std::string("bad matrix document: ") + e.what());
    }
}

std::string serialize_matmorph(const VectC& v, const MatMorph& m) {
    const FinCategory& c = v.cat();
    ordered_json j;
    j["src"] = ordered_json::array();
    for (int e : m.src.entries) j["src"].push_back(c.object_name(e));
    j["tgt"] = ordered_json::array();
    for (int e : m.tgt.entries) j["tgt"].push_back(c.object_name(e));
    j["cells"] = ordered_json::array();
    for (int i = 0; i < m.tgt.length(); ++i) {
        ordered_json row = ordered_json::array();
        for (int jj = 0; jj < m.src.length(); ++jj) {
            ordered_json cell = ordered_json::object();
            for (const auto& [mid, coeff] : m.cells[i][jj].terms) cell[c.morph(mid).name] = coeff.str();
            row.push_back(std::move(cell));
        }
        j["cells"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

SeqObject parse_sequence(const FinCategory& c, const std::string& text) {
    std::vector<int> entries;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // trim
        size_t a = token.find_first_not_of(" \t");
        size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        token = token.substr(a, b - a + 1);
        auto idx = c.find_object(token);
        if (!idx) throw Error("UsageError", "unknown object '" + token + "'");
        entries.push_back(*idx);
    }
    return SeqObject{entries};
}

}  // namespace cat2vect
