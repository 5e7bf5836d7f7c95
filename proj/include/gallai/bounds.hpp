#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gallai {

/// Exact integer type for the bound formulas. Every operation is overflow
/// checked; overflow raises ErrorCode::Overflow.
using BoundInt = __int128;

std::string to_string(BoundInt v);

struct BoundResult {
    enum class Kind { Exact, Interval };

    Kind kind = Kind::Exact;
    BoundInt lo = 0;  // the value, for Exact
    BoundInt hi = 0;
    std::string formula_id;
    std::vector<std::string> notes;

    static BoundResult exact(BoundInt v, std::string id, std::vector<std::string> notes = {});
    static BoundResult interval(BoundInt lo, BoundInt hi, std::string id, std::vector<std::string> notes = {});

    BoundInt value() const { return lo; }
    bool is_exact() const { return kind == Kind::Exact; }
};

/// R(C_m, C_n) for 3 <= m <= n. (3,3) and (4,4) come from an exception table.
BoundResult ramsey_cycle(std::size_t m, std::size_t n);

/// R(W_n, W_n): exact for n = 5, 6, an interval for n >= 7.
BoundResult ramsey_wheel(std::size_t n);

/// gr_k(K3 : W5).
BoundResult gr_w5(std::size_t k);

/// Lower and upper bounds on gr_k(K3 : W_n) for n >= 6, k >= 2.
BoundResult gr_wheel_bounds(std::size_t n, std::size_t k);

/// Upper bound on gr_k(K3 : rW_n, sC_{n-1}, tP_{n-2}), k = r + s + t, as Interval(1, value).
BoundResult gr_mixed_upper(std::size_t n, std::size_t r, std::size_t s, std::size_t t);

/// gr_k(K3 : C_{2l+1}) = l * 2^k + 1.
BoundResult gr_odd_cycle(std::size_t l, std::size_t k);

/// gr_k(K3 : F_n): exact for n = 2, an interval otherwise.
BoundResult gr_fan(std::size_t n, std::size_t k);

}  // namespace gallai
