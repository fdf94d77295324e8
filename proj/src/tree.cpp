#include "combinach/tree.hpp"

#include "combinach/errors.hpp"

namespace combinach {

index_t tree_code(const std::string& bits) {
  index_t c = 1;
  for (char b : bits) {
    if (b != '0' && b != '1') throw validation_error("binary string expected");
    if (c > (INT64_MAX - 1) / 2) throw validation_error("tree code overflow");
    c = 2 * c + (b - '0');
  }
  return c;
}

std::string tree_decode(index_t code) {
  if (code < 1) throw validation_error("tree codes start at 1");
  std::string bits;
  while (code > 1) {
    bits += static_cast<char>('0' + (code & 1));
    code >>= 1;
  }
  return std::string(bits.rbegin(), bits.rend());
}

int tree_depth(index_t code) {
  if (code < 1) throw validation_error("tree codes start at 1");
  int d = 0;
  while (code > 1) {
    code >>= 1;
    ++d;
  }
  return d;
}

index_t tree_parent(index_t code) {
  if (code < 2) throw validation_error("the root has no parent");
  return code >> 1;
}

index_t tree_child(index_t code, int bit) {
  if (bit != 0 && bit != 1) throw validation_error("bit must be 0 or 1");
  return 2 * code + bit;
}

bool tree_is_prefix(index_t a, index_t b) {
  if (a < 1 || b < 1) throw validation_error("tree codes start at 1");
  while (b > a) b >>= 1;
  return b == a;
}

bool is_antichain(const FiniteSet& codes) {
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) {
      // codes are increasing, so only codes[i] can be the ancestor
      if (tree_is_prefix(codes[i], codes[j])) return false;
    }
  }
  return true;
}

}  // namespace combinach
