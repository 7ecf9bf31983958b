// Partitions, Littlewood-Richardson, Kronecker and plethysm coefficients.
#pragma once

#include "mcone/core.hpp"

#include <vector>

namespace mcone {

// Weakly decreasing positive parts; the empty partition is the trivial one.
using Partition = std::vector<int>;

int size(const Partition& p);
Partition trim(Partition p);
bool contains(const Partition& outer, const Partition& inner);
// Partitions of n with at most max_len parts, each at most max_part (-1: no bound).
std::vector<Partition> partitions(int n, int max_len = -1, int max_part = -1);
std::string to_string(const Partition& p);

// c^nu_{lambda mu} by counting LR tableaux of shape nu/lambda and content mu.
Int lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);
// Multiple coefficient: multiplicity of s_nu in the product of the s_lambda.
Int lr_coefficient(const Partition& nu, const std::vector<Partition>& lambdas);

// chi^lambda at the class of cycle type mu (Murnaghan-Nakayama).
Int character(const Partition& lambda, const Partition& mu);
// n! / |class of mu|
Int centralizer_order(const Partition& mu);
// Multiplicity of the trivial module in the tensor product of the Specht
// modules; 0 if sizes differ.
Int kronecker_coefficient(const std::vector<Partition>& lambdas);

// Multiplicity of s_mu in the plethysm s_lambda[s_theta]; 0 unless
// |mu| = |lambda| |theta|.
Int plethysm_coefficient(const Partition& lambda, const Partition& theta, const Partition& mu);

}  // namespace mcone
