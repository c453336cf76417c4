#pragma once

#include "fic/errors.hpp"
#include "fic/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fic {

// One linear equation sum_j coeffs[j] * x_j = rhs.  The label survives
// elimination: when rows combine, their label sets merge, so a contradiction
// can name every original constraint that took part in it.
struct LinearConstraint {
  std::string label;
  std::vector<Rational> coeffs;
  Rational rhs;
};

// Gauss-Jordan over the rationals.  Returns the unique solution, throws
// InconsistentSystem (listing the merged labels of every vanished row with a
// nonzero right-hand side) or UnderdeterminedSystem (naming the free
// unknowns).  Contradictions win over leftover freedom: a system that is
// both reports the contradiction.
inline std::vector<Rational> solve_labeled(
    const std::vector<LinearConstraint>& constraints, std::size_t n_unknowns,
    const std::vector<std::string>& unknown_names = {}) {
  struct Row {
    std::vector<Rational> lhs;
    Rational rhs;
    std::vector<std::size_t> labels;
  };
  std::vector<Row> rows;
  rows.reserve(constraints.size());
  for (std::size_t idx = 0; idx < constraints.size(); ++idx) {
    const LinearConstraint& c = constraints[idx];
    if (c.coeffs.size() != n_unknowns) {
      throw std::invalid_argument("constraint [" + c.label + "] has " +
                                  std::to_string(c.coeffs.size()) +
                                  " coefficients, expected " +
                                  std::to_string(n_unknowns));
    }
    rows.push_back(Row{c.coeffs, c.rhs, {idx}});
  }

  auto merge = [](std::vector<std::size_t>& into,
                  const std::vector<std::size_t>& from) {
    for (std::size_t tag : from) {
      if (std::find(into.begin(), into.end(), tag) == into.end())
        into.push_back(tag);
    }
  };

  std::vector<std::size_t> pivot_cols;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < n_unknowns && lead < rows.size(); ++col) {
    std::size_t pr = lead;
    while (pr < rows.size() && rows[pr].lhs[col] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[lead], rows[pr]);
    const Rational pivot = rows[lead].lhs[col];
    for (Rational& v : rows[lead].lhs) v /= pivot;
    rows[lead].rhs /= pivot;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r].lhs[col] == 0) continue;
      const Rational f = rows[r].lhs[col];
      for (std::size_t j = 0; j < n_unknowns; ++j)
        rows[r].lhs[j] -= f * rows[lead].lhs[j];
      rows[r].rhs -= f * rows[lead].rhs;
      merge(rows[r].labels, rows[lead].labels);
    }
    pivot_cols.push_back(col);
    ++lead;
  }

  // Rows past the pivot block have an identically zero left-hand side.
  std::vector<std::size_t> offending;
  for (std::size_t r = lead; r < rows.size(); ++r) {
    if (rows[r].rhs != 0) merge(offending, rows[r].labels);
  }
  if (!offending.empty()) {
    std::sort(offending.begin(), offending.end());
    std::vector<std::string> names;
    names.reserve(offending.size());
    std::string msg = "contradictory linear system; offending constraints:";
    for (std::size_t idx : offending) {
      names.push_back(constraints[idx].label);
      msg += " [" + constraints[idx].label + "]";
    }
    throw InconsistentSystem(msg, std::move(names));
  }

  if (pivot_cols.size() < n_unknowns) {
    std::vector<std::string> free_names;
    std::size_t p = 0;
    for (std::size_t j = 0; j < n_unknowns; ++j) {
      if (p < pivot_cols.size() && pivot_cols[p] == j) {
        ++p;
        continue;
      }
      free_names.push_back(j < unknown_names.size()
                               ? unknown_names[j]
                               : "x" + std::to_string(j));
    }
    throw UnderdeterminedSystem(
        "linear system leaves " + std::to_string(free_names.size()) +
            " unknown(s) free",
        std::move(free_names));
  }

  std::vector<Rational> solution(n_unknowns, Rational(0));
  for (std::size_t p = 0; p < pivot_cols.size(); ++p)
    solution[pivot_cols[p]] = rows[p].rhs;
  return solution;
}

}  // namespace fic
