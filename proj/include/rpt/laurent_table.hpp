#ifndef RPT_LAURENT_TABLE_HPP
#define RPT_LAURENT_TABLE_HPP

#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace rpt
{

// Dense table of Laurent coefficients coeff[k][i], 0 <= k <= K, 0 <= i <= I.
//
// Row k >= 1 holds C_k(x) = x^(1-2k) * sum_i coeff[k][i] x^i, row 0 holds
// C_0(x) = x * sum_i coeff[0][i] x^i. With this offset every product
// C_j C_(k-j) contributes coeff[j][p] * coeff[k-j][i-p] to the same power
// x^(2-2k+i), for j = 0 as well as j >= 1.
//
// Rows are filled left to right with push(). Reading an entry that has not
// been pushed yet is an OrderingViolation; indices beyond I read as zero.
template <Scalar T>
class LaurentTable
{
  public:
    LaurentTable(int max_order, int max_index)
        : max_order_(max_order), max_index_(max_index), filled_(static_cast<std::size_t>(max_order + 1), 0),
          nonzeros_(static_cast<std::size_t>(max_order + 1))
    {
        if (max_order < 0 || max_index < 0) {
            throw ValidationError("Laurent table dimensions must be non-negative");
        }
        const auto size = static_cast<std::size_t>(max_order + 1) * static_cast<std::size_t>(max_index + 1);
        coeff_.resize(size, T(0));
        nonzero_.resize(size, 0);
    }

    int max_order() const noexcept { return max_order_; }
    int max_index() const noexcept { return max_index_; }

    // Number of leading entries of row k that have been pushed.
    int filled(int k) const { return filled_.at(static_cast<std::size_t>(k)); }
    bool row_complete(int k) const { return filled(k) == max_index_ + 1; }

    const T& at(int k, int i) const
    {
        check_order(k);
        if (i < 0 || i > max_index_) {
            return zero_;
        }
        if (i >= filled_[static_cast<std::size_t>(k)]) {
            throw OrderingViolation("coefficient C^" + std::to_string(k) + "_" + std::to_string(i) +
                                    " read before it was computed");
        }
        return coeff_[offset(k, i)];
    }

    void push(int k, T value)
    {
        check_order(k);
        int& n = filled_[static_cast<std::size_t>(k)];
        if (n > max_index_) {
            throw OrderingViolation("row " + std::to_string(k) + " is already complete");
        }
        const auto at = offset(k, n);
        if (!is_zero(value)) {
            nonzero_[at] = 1;
            nonzeros_[static_cast<std::size_t>(k)].push_back(n);
        }
        coeff_[at] = std::move(value);
        ++n;
    }

    // Raw views used by the recursion kernels. Entries past filled(k) hold
    // zero and are flagged as such.
    std::span<const T> row(int k) const
    {
        check_order(k);
        return {coeff_.data() + offset(k, 0), static_cast<std::size_t>(max_index_ + 1)};
    }
    std::span<const unsigned char> nonzero_mask(int k) const
    {
        check_order(k);
        return {nonzero_.data() + offset(k, 0), static_cast<std::size_t>(max_index_ + 1)};
    }
    // Ascending indices of the non-zero entries pushed so far.
    std::span<const int> nonzeros(int k) const
    {
        check_order(k);
        return nonzeros_[static_cast<std::size_t>(k)];
    }

  private:
    std::size_t offset(int k, int i) const
    {
        return static_cast<std::size_t>(k) * static_cast<std::size_t>(max_index_ + 1) + static_cast<std::size_t>(i);
    }
    void check_order(int k) const
    {
        if (k < 0 || k > max_order_) {
            throw OrderOutOfRange("order " + std::to_string(k) + " outside table of max order " +
                                  std::to_string(max_order_));
        }
    }

    int max_order_;
    int max_index_;
    std::vector<T> coeff_;
    std::vector<unsigned char> nonzero_;
    std::vector<int> filled_;
    std::vector<std::vector<int>> nonzeros_;
    T zero_{0};
};

} // namespace rpt

#endif
