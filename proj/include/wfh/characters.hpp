#pragma once

#include "wfh/fh.hpp"

#include <string>
#include <vector>

namespace wfh {

// χ^λ at cycle type μ.
BigInt mn_character(const Partition& lambda, const Partition& mu);

// Value of f on an irreducible: t -> n and the slot variables -> content
// scalars of the boxes of lambda (irrep-indexed multipartition).
Rational evaluate_at_contents(const TensorElement& f, const Multipartition& lambda, const GroupData& g);

// Central character of the class with reduced cycle type mu_red on V^lambda.
BigInt sym_central_character_content(const Partition& lambda, const Partition& mu_red, int n);

// Character of the irreducible V^lambda of Γ≀S_n at the class of the given
// unreduced cycle type, summed over the whole group.
Rational wreath_character(const Multipartition& lambda, const Multipartition& type, const Wreath& w,
                          int max_n = 3);

// Central character of the class sum K_mu (partially-reduced) on V^lambda.
Rational wreath_central_character_content(const Multipartition& lambda, const Multipartition& mu,
                                          const FHAlgebra& fh);

// Irreducible labels are irrep-indexed multipartitions; for S_n the labels
// sit in component 0.
struct BlockPartition {
  int n = 0;
  int p = 0;
  std::vector<std::vector<Multipartition>> blocks;  // each sorted, blocks sorted
  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

BlockPartition nakayama_blocks(int n, int p);
BlockPartition wreath_blocks(const GroupData& g, int n, int p);
// Grouping by congruence of all central characters mod p.
BlockPartition congruence_blocks(const FHAlgebra& fh, int n, int p);

struct BlockReport {
  BlockPartition predicted;  // wreath_blocks
  BlockPartition observed;   // congruence_blocks
  bool agrees = false;
  std::vector<Multipartition> discrepancies;
};

BlockReport cross_validate_blocks(const FHAlgebra& fh, int n, int p);

std::string to_string(const BlockPartition& b, bool short_form);

}  // namespace wfh
