#include "cat2vect/group_table.hpp"

#include <algorithm>
#include <numeric>

namespace cat2vect {

namespace {

void check_monoid(const std::vector<std::vector<int>>& mul, int id, int n) {
    if (static_cast<int>(mul.size()) != n) throw Error("InvalidAlgebraTable", "table size");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n) throw Error("InvalidAlgebraTable", "row size");
        for (int v : row)
            if (v < 0 || v >= n) throw Error("InvalidAlgebraTable", "entry out of range");
    }
    if (id < 0 || id >= n) throw Error("InvalidAlgebraTable", "identity out of range");
    for (int a = 0; a < n; ++a)
        if (mul[id][a] != a || mul[a][id] != a)
            throw Error("InvalidAlgebraTable", "identity is not a two-sided unit");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw Error("InvalidAlgebraTable", "associativity fails at (" + std::to_string(a) +
                                                           "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

}  // namespace

MonoidTable MonoidTable::from_table(std::vector<std::string> names, std::vector<std::vector<int>> mul,
                                    int identity) {
    check_monoid(mul, identity, static_cast<int>(names.size()));
    return MonoidTable{std::move(names), std::move(mul), identity};
}

GroupTable GroupTable::from_table(std::vector<std::string> names, std::vector<std::vector<int>> mul) {
    int n = static_cast<int>(names.size());
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (mul[e][a] != a || mul[a][e] != a) {
                ok = false;
                break;
            }
        if (ok) id = e;
    }
    if (id < 0) throw Error("InvalidAlgebraTable", "no identity element");
    check_monoid(mul, id, n);
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul[a][b] == id && mul[b][a] == id) {
                inv[a] = b;
                break;
            }
        if (inv[a] < 0) throw Error("InvalidAlgebraTable", "element without inverse: " + names[a]);
    }
    return GroupTable{std::move(names), std::move(mul), std::move(inv), id};
}

GroupTable GroupTable::trivial() { return cyclic(1); }

GroupTable GroupTable::cyclic(int n) {
    if (n < 1) throw Error("InvalidAlgebraTable", "cyclic order must be positive");
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        names[i] = "g" + std::to_string(i);
        for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
    }
    names[0] = "e";
    return from_table(std::move(names), std::move(mul));
}

GroupTable GroupTable::klein4() {
    return direct_product(cyclic(2), cyclic(2));
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::string perm_name(const std::vector<int>& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) s += std::to_string(p[i]);
    return s + ")";
}

int perm_sign(std::vector<int> p) {
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

GroupTable group_of_permutations(const std::vector<std::vector<int>>& perms) {
    int n = static_cast<int>(perms.size());
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> mul(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) names[i] = perm_name(perms[i]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> comp(perms[i].size());
            for (size_t k = 0; k < comp.size(); ++k) comp[k] = perms[i][perms[j][k]];
            auto it = std::find(perms.begin(), perms.end(), comp);
            if (it == perms.end()) throw Error("InvalidAlgebraTable", "permutation set not closed");
            mul[i][j] = static_cast<int>(it - perms.begin());
        }
    return GroupTable::from_table(std::move(names), std::move(mul));
}

}  // namespace

GroupTable GroupTable::symmetric(int n) {
    if (n < 1 || n > 4) throw Error("InvalidAlgebraTable", "symmetric(n) supported for 1 <= n <= 4");
    return group_of_permutations(all_permutations(n));
}

GroupTable GroupTable::alternating4() {
    std::vector<std::vector<int>> even;
    for (const auto& p : all_permutations(4))
        if (perm_sign(p) == 1) even.push_back(p);
    return group_of_permutations(even);
}

GroupTable GroupTable::dihedral(int n) {
    if (n < 2) throw Error("InvalidAlgebraTable", "dihedral(n) needs n >= 2");
    // elements r^i and s r^i; s r s = r^{-1}
    int order = 2 * n;
    std::vector<std::string> names(order);
    auto idx = [n](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
    for (int i = 0; i < n; ++i) {
        names[idx(0, i)] = i == 0 ? "e" : "r" + std::to_string(i);
        names[idx(1, i)] = i == 0 ? "s" : "sr" + std::to_string(i);
    }
    std::vector<std::vector<int>> mul(order, std::vector<int>(order));
    for (int f1 = 0; f1 < 2; ++f1)
        for (int i = 0; i < n; ++i)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int j = 0; j < n; ++j) {
                    // (s^f1 r^i)(s^f2 r^j) = s^(f1+f2) r^(±i + j)
                    int rot = f2 ? (j - i) : (i + j);
                    mul[idx(f1, i)][idx(f2, j)] = idx((f1 + f2) % 2, rot);
                }
    return from_table(std::move(names), std::move(mul));
}

GroupTable GroupTable::quaternion8() {
    // {1, -1, i, -i, j, -j, k, -k}
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto neg = [](int a) { return a ^ 1; };
    std::vector<std::vector<int>> mul(8, std::vector<int>(8, -1));
    // base table on {1, i, j, k} with signs
    auto base_mul = [&](int a, int b, int& out, bool& negate) {
        // a, b in {0=1, 1=i, 2=j, 3=k}
        static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        out = prod[a][b];
        negate = sign[a][b] < 0;
    };
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ba = a / 2, bb = b / 2;
            bool sa = a % 2, sb = b % 2;
            int out;
            bool neg_out;
            base_mul(ba, bb, out, neg_out);
            int r = out * 2;
            if (neg_out ^ sa ^ sb) r = neg(r);
            mul[a][b] = r;
        }
    return from_table(std::move(names), std::move(mul));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
    int n = a.order() * b.order();
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < b.order(); ++y) names[idx(x, y)] = "(" + a.names[x] + "," + b.names[y] + ")";
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    mul[idx(x1, y1)][idx(x2, y2)] = idx(a.mul[x1][x2], b.mul[y1][y2]);
    return from_table(std::move(names), std::move(mul));
}

int GroupTable::element_order(int g) const {
    int ord = 1, acc = g;
    while (acc != id) {
        acc = mul[acc][g];
        ++ord;
    }
    return ord;
}

int GroupTable::exponent() const {
    long long e = 1;
    for (int g = 0; g < order(); ++g) e = std::lcm(e, static_cast<long long>(element_order(g)));
    return static_cast<int>(e);
}

std::vector<std::vector<int>> GroupTable::conjugacy_classes() const {
    std::vector<bool> seen(order(), false);
    std::vector<std::vector<int>> classes;
    for (int g = 0; g < order(); ++g) {
        if (seen[g]) continue;
        std::vector<int> cls;
        for (int h = 0; h < order(); ++h) {
            int c = mul[mul[h][g]][inv[h]];
            if (!seen[c]) {
                seen[c] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace cat2vect
