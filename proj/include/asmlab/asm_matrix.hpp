#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

// Alternating sign matrices: n x n over {-1,0,1}, every row/column prefix sum
// in {0,1}, every full row/column sum equal to 1.

namespace asmlab {

struct Asm {
    int n = 0;
    std::vector<int8_t> entries;  // row-major, n*n

    int at(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }  // 1-based

    auto operator<=>(const Asm&) const = default;
};

struct AsmError : std::runtime_error {
    enum Kind { BadShape, BadEntry, BadPrefix, BadTotal };
    Kind kind;
    int i, j;  // 1-based position of the first offending entry/line (j=0 for row totals etc.)

    AsmError(Kind k, int i_, int j_, const std::string& what)
        : std::runtime_error(what), kind(k), i(i_), j(j_) {}
};

// Throws AsmError naming the first violated condition.
Asm validate_asm(int n, const std::vector<std::vector<int>>& entries);
Asm validate_asm_flat(int n, const std::vector<int8_t>& flat);

// Column prefix sums c_{i,j}, row prefix sums r_{i,j} (1-based, with the
// empty prefix equal to 0) and corner sums s_{i,j} = sum_{k<=i, l<=j} a_{k,l}
// on the 0..n x 0..n index grid.
struct PartialSums {
    int n = 0;
    std::vector<int8_t> c;  // n*n, c(i,j) 1-based
    std::vector<int8_t> r;  // n*n
    std::vector<int16_t> s;  // (n+1)*(n+1), s(i,j) 0-based indices

    int col(int i, int j) const { return i == 0 ? 0 : c[(i - 1) * n + (j - 1)]; }
    int row(int i, int j) const { return j == 0 ? 0 : r[(i - 1) * n + (j - 1)]; }
    int corner(int i, int j) const { return s[i * (n + 1) + j]; }
};

PartialSums partial_sums(const Asm& a);

// All ASMs of size n in row-major lexicographic order of entries (-1 < 0 < 1).
// The callback form prunes on prefix sums; the vector form collects.
void enumerate_asms(int n, const std::function<void(const Asm&)>& fn);
std::vector<Asm> enumerate_asms(int n);
long long count_asms(int n);

}  // namespace asmlab
