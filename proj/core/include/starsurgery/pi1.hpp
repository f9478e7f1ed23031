#pragma once

#include <optional>
#include <vector>

#include "starsurgery/handlebody.hpp"
#include "starsurgery/snf.hpp"

namespace starsurgery {

/// Finite presentation; relator letters are +g / -g for generator g in
/// 1..generators, words freely reduced.
struct GroupPresentation {
  std::size_t generators = 0;
  std::vector<std::vector<int>> relators;
};

/// Coset enumeration over the trivial subgroup (HLT strategy with
/// coincidence handling).  Returns the group order when the table closes
/// within the budget, std::nullopt otherwise.
std::optional<unsigned long> todd_coxeter_order(const GroupPresentation& pres,
                                                std::size_t max_cosets,
                                                std::size_t* cosets_used = nullptr);

AbelianGroup abelianization(const GroupPresentation& pres);

struct Pi1Report {
  GroupPresentation presentation;
  AbelianGroup abelianized;
  std::optional<unsigned long> order;  // nullopt: enumeration budget exceeded
  std::size_t cosets_used = 0;
};

/// Fundamental group of the filling: one generator per dotted circle, one
/// relator per 2-handle (product of the circles it runs over, in increasing
/// label order).
Pi1Report pi1_report(const Handlebody& h, std::size_t max_cosets = 100000);

}  // namespace starsurgery
