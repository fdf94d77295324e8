#pragma once

#include <string>

#include "combinach/finite_set.hpp"

namespace combinach {

// Level-order identification of the positive integers with finite binary
// strings: the empty string is 1 and appending bit b to a node with code c
// gives 2c + b.  The string length equals floor(log2(code)), so the weight
// 2^(-|s|) of a node agrees with the dyadic block weight of its code.

index_t tree_code(const std::string& bits);  // characters '0'/'1'
std::string tree_decode(index_t code);       // code >= 1
int tree_depth(index_t code);                // |s|
index_t tree_parent(index_t code);           // code >= 2
index_t tree_child(index_t code, int bit);

// a is an ancestor of b or equal to it.
bool tree_is_prefix(index_t a, index_t b);

// Pairwise incomparability under the prefix order.
bool is_antichain(const FiniteSet& codes);

}  // namespace combinach
