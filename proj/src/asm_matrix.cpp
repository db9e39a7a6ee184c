#include "asmlab/asm_matrix.hpp"

namespace asmlab {

Asm validate_asm_flat(int n, const std::vector<int8_t>& flat) {
    if (n < 1 || static_cast<int>(flat.size()) != n * n)
        throw AsmError(AsmError::BadShape, 0, 0, "validate_asm: entries are not n x n");
    auto at = [&](int i, int j) { return flat[(i - 1) * n + (j - 1)]; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (at(i, j) < -1 || at(i, j) > 1)
                throw AsmError(AsmError::BadEntry, i, j,
                               "entry out of {-1,0,1} at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (int i = 1; i <= n; ++i) {
        int sum = 0;
        for (int j = 1; j <= n; ++j) {
            sum += at(i, j);
            if (sum < 0 || sum > 1)
                throw AsmError(AsmError::BadPrefix, i, j,
                               "row prefix sum out of {0,1} at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        if (sum != 1)
            throw AsmError(AsmError::BadTotal, i, 0, "row " + std::to_string(i) + " sums to " + std::to_string(sum));
    }
    for (int j = 1; j <= n; ++j) {
        int sum = 0;
        for (int i = 1; i <= n; ++i) {
            sum += at(i, j);
            if (sum < 0 || sum > 1)
                throw AsmError(AsmError::BadPrefix, i, j,
                               "column prefix sum out of {0,1} at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        if (sum != 1)
            throw AsmError(AsmError::BadTotal, 0, j, "column " + std::to_string(j) + " sums to " + std::to_string(sum));
    }
    return Asm{n, flat};
}

Asm validate_asm(int n, const std::vector<std::vector<int>>& entries) {
    if (static_cast<int>(entries.size()) != n)
        throw AsmError(AsmError::BadShape, 0, 0, "validate_asm: wrong row count");
    std::vector<int8_t> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != n)
            throw AsmError(AsmError::BadShape, 0, 0, "validate_asm: ragged rows");
        for (int v : row) {
            if (v < -2 || v > 2) v = 2;  // clamp so the int8 cast cannot wrap into range
            flat.push_back(static_cast<int8_t>(v));
        }
    }
    return validate_asm_flat(n, flat);
}

PartialSums partial_sums(const Asm& a) {
    int n = a.n;
    PartialSums ps;
    ps.n = n;
    ps.c.assign(static_cast<size_t>(n) * n, 0);
    ps.r.assign(static_cast<size_t>(n) * n, 0);
    ps.s.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int idx = (i - 1) * n + (j - 1);
            ps.c[idx] = static_cast<int8_t>((i > 1 ? ps.c[idx - n] : 0) + a.at(i, j));
            ps.r[idx] = static_cast<int8_t>((j > 1 ? ps.r[idx - 1] : 0) + a.at(i, j));
            ps.s[i * (n + 1) + j] = static_cast<int16_t>(
                ps.s[(i - 1) * (n + 1) + j] + ps.s[i * (n + 1) + (j - 1)] -
                ps.s[(i - 1) * (n + 1) + (j - 1)] + a.at(i, j));
        }
    return ps;
}

namespace {

// Depth-first fill, row-major, trying -1 < 0 < 1 at each cell. Prefix sums
// stay in {0,1}; rows close at 1, columns close at 1 on the last row.
struct AsmDfs {
    int n;
    std::vector<int8_t> grid;
    std::vector<int8_t> colsum;
    const std::function<void(const Asm&)>& fn;

    AsmDfs(int n_, const std::function<void(const Asm&)>& fn_)
        : n(n_), grid(static_cast<size_t>(n_) * n_, 0), colsum(n_, 0), fn(fn_) {}

    void cell(int i, int j, int rowsum) {
        if (j == n) {
            if (rowsum != 1) return;
            if (i == n - 1)
                fn(Asm{n, grid});
            else
                cell(i + 1, 0, 0);
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            int r = rowsum + v;
            int c = colsum[j] + v;
            if (r < 0 || r > 1 || c < 0 || c > 1) continue;
            if (i == n - 1 && c != 1) continue;
            grid[i * n + j] = static_cast<int8_t>(v);
            colsum[j] = static_cast<int8_t>(c);
            cell(i, j + 1, r);
            colsum[j] = static_cast<int8_t>(c - v);
        }
    }
};

}  // namespace

void enumerate_asms(int n, const std::function<void(const Asm&)>& fn) {
    if (n < 1) throw std::invalid_argument("enumerate_asms: n must be >= 1");
    AsmDfs dfs(n, fn);
    dfs.cell(0, 0, 0);
}

std::vector<Asm> enumerate_asms(int n) {
    std::vector<Asm> out;
    enumerate_asms(n, [&](const Asm& a) { out.push_back(a); });
    return out;
}

long long count_asms(int n) {
    long long c = 0;
    enumerate_asms(n, [&](const Asm&) { ++c; });
    return c;
}

}  // namespace asmlab
