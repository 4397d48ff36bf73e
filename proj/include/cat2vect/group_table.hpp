/**
 * @file group_table.hpp
 * @brief Finite monoids and groups as explicit multiplication tables.
 */

#pragma once

#include <string>
#include <vector>

#include "cat2vect/error.hpp"

namespace cat2vect {

/// Finite monoid given by a total multiplication table. Axioms are verified
/// exhaustively at construction; bad tables throw InvalidAlgebraTable.
struct MonoidTable {
    std::vector<std::string> names;
    std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
    int id = 0;

    static MonoidTable from_table(std::vector<std::string> names, std::vector<std::vector<int>> mul,
                                  int identity);

    int order() const { return static_cast<int>(names.size()); }
};

/// Finite group; adds the inverse map on top of MonoidTable and verifies it.
struct GroupTable {
    std::vector<std::string> names;
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    int id = 0;

    static GroupTable from_table(std::vector<std::string> names, std::vector<std::vector<int>> mul);

    static GroupTable trivial();
    static GroupTable cyclic(int n);
    static GroupTable klein4();
    static GroupTable symmetric(int n);    ///< S_n for n <= 4
    static GroupTable alternating4();
    static GroupTable dihedral(int n);     ///< D_n of order 2n, n >= 2
    static GroupTable quaternion8();
    static GroupTable direct_product(const GroupTable& a, const GroupTable& b);

    int order() const { return static_cast<int>(names.size()); }
    int element_order(int g) const;
    int exponent() const;
    std::vector<std::vector<int>> conjugacy_classes() const;  ///< sorted, identity class first

    MonoidTable as_monoid() const { return MonoidTable{names, mul, id}; }
};

}  // namespace cat2vect
