#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "asmlab/sixvertex.hpp"

// Height matrices on L_{m,n} and height functions of degree n: unit steps
// along rows and columns, h_{0,0}=0, and for height functions the boundary
// h_{i,0} = h_{0,i} = h_{n-i,n} = h_{n,n-i} = i. Also the graded poset P_n
// whose order ideals receive height functions through iota.

namespace asmlab {

struct HeightMatrix {
    int m = 0;
    int n = 0;
    std::vector<int> h;  // (m+1)*(n+1), row-major, indices 0..m x 0..n

    int at(int i, int j) const { return h[i * (n + 1) + j]; }
    int& at(int i, int j) { return h[i * (n + 1) + j]; }

    auto operator<=>(const HeightMatrix&) const = default;
};

struct InvalidHeight : std::runtime_error {
    explicit InvalidHeight(const std::string& what) : std::runtime_error(what) {}
};

struct PathInconsistent : std::runtime_error {
    int i, j;
    PathInconsistent(int i_, int j_)
        : std::runtime_error("height accumulation is path dependent at (" + std::to_string(i_) +
                             "," + std::to_string(j_) + ")"),
          i(i_), j(j_) {}
};

// A height function of degree n is a square HeightMatrix passing validate_height_fn.
using HeightFn = HeightMatrix;

HeightFn validate_height_fn(int n, const std::vector<std::vector<int>>& rows);
void check_height_fn(const HeightMatrix& h);  // throws InvalidHeight

// Pointwise order on the interior entries (1 <= i,j < n).
bool height_leq(const HeightFn& a, const HeightFn& b);

// The step taken when moving east across V(i,j) / south across H(i,j).
inline int east_step(const IceState& s, int i, int j) {
    return s.comes_in(V(i, j), {i, j}) ? 1 : -1;
}
inline int south_step(const IceState& s, int i, int j) {
    return s.goes_out(H(i, j), {i, j}) ? 1 : -1;
}

// Heights accumulated row-first from h_{0,0}=0; the column rule is verified
// at every cell. Total for ice states; PathInconsistent only for raw bit
// patterns fed through the unchecked entry point.
HeightMatrix state_to_height(const IceState& s);
HeightMatrix height_matrix_unchecked(const GridSpec& spec, const std::vector<uint8_t>& bits);

// Accumulate h_{i,j} along an arbitrary monotone lattice path from (0,0),
// given as a string of 'E'/'S' moves of total length i+j.
int height_along_path(const IceState& s, int i, int j, const std::string& moves);

// Inverse of state_to_height on height functions: edge directions recovered
// from the unit steps; the result is an open-boundary ice state.
IceState height_to_state(const HeightFn& h);

// h_{i,j} = i + j - 2 s_{i,j} and its -1/2 inverse.
HeightFn asm_to_height(const Asm& a);
Asm height_to_asm(const HeightFn& h);

// trc(i,j) = min{i, n-i, j, n-j} for 1 <= i,j < n.
int track(int n, int i, int j);

// The (trc+1)-element arithmetic progression {|i-j|, |i-j|+2, ...} of values
// h_{i,j} can take over all height functions of degree n.
std::vector<int> height_value_set(int n, int i, int j);

// P_n = {(i,j,k) : 1 <= i,j < n, 1 <= k <= min(i,j,n-i,n-j)}, rank |i-j|+2k-2.
struct PosetElement {
    int i = 0, j = 0, k = 0;
    auto operator<=>(const PosetElement&) const = default;
    int rank() const { return std::abs(i - j) + 2 * k - 2; }
    std::string str() const {
        return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    }
};

// All elements in lexicographic order; empty for n <= 1.
std::vector<PosetElement> poset_elements(int n);

// x covers y: ranks differ by one and the cells are grid-adjacent.
bool covers(int n, const PosetElement& x, const PosetElement& y);

// Coefficients of sum_{r=0}^{n-2} (n-r-1)(r+1) q^r; empty for n <= 1.
std::vector<long long> rank_polynomial(int n);

using OrderIdeal = std::set<PosetElement>;

// iota(h) = {(i,j,k) in P_n : h_{i,j} >= |i-j| + 2k}.
OrderIdeal iota(const HeightFn& h);

bool is_order_ideal(int n, const OrderIdeal& s);

// All order ideals of P_n, deterministic order (DFS over elements in lex
// order, exclude before include).
void enumerate_order_ideals(int n, const std::function<void(const OrderIdeal&)>& fn);
long long count_order_ideals(int n);

// Independent enumeration of all height functions of degree n (cell-by-cell
// DFS against the adjacency and boundary conditions).
void enumerate_height_fns(int n, const std::function<void(const HeightFn&)>& fn);
std::vector<HeightFn> enumerate_height_fns(int n);

}  // namespace asmlab
