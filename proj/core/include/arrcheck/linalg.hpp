#pragma once

#include <vector>

#include "arrcheck/field.hpp"

namespace arrcheck {

/// Dense row-major matrix of scalars from one field.
class ScalarMatrix {
  public:
    ScalarMatrix(FieldPtr field, int rows, int cols)
        : field_(std::move(field)),
          rows_(rows),
          cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
             FieldScalar::zero(field_)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    FieldScalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const FieldScalar& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

  private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<FieldScalar> a_;
};

struct KernelResult {
    int rank = 0;
    /// Canonically normalized vectors (primitive integral, first nonzero
    /// entry positive) spanning the right kernel.
    std::vector<std::vector<FieldScalar>> basis;
};

/// Rank by deterministic fraction-free elimination (pivot = smallest entry,
/// then lowest row). Exact over all three supported fields.
int rank_of(const ScalarMatrix& m);

/// Right kernel basis; rank() of the result equals rank_of(m).
KernelResult kernel_of(const ScalarMatrix& m);

/// Scales a vector to canonical primitive form: divide by the first nonzero
/// entry, then clear denominators and strip common integral content.
/// The zero vector is returned unchanged.
std::vector<FieldScalar> primitive_vector(std::vector<FieldScalar> v);

}  // namespace arrcheck
