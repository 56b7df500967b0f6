#pragma once

#include <cstdint>
#include <vector>

namespace sata {

// A bit table with 2^nbits entries, packed into 64-bit words (little-endian:
// table index i lives at word i/64, bit i%64). Entries beyond 2^nbits in the
// last word are kept zero by every routine in this module.
using BitTable = std::vector<std::uint64_t>;

// Number of words needed for a 2^nbits-entry table (at least one).
inline std::size_t table_words(int nbits) {
  return nbits <= 6 ? 1u : (std::size_t{1} << (nbits - 6));
}

inline BitTable make_table(int nbits) { return BitTable(table_words(nbits), 0); }

inline bool get_bit(const BitTable& t, std::uint64_t idx) {
  return (t[idx >> 6] >> (idx & 63)) & 1u;
}

inline void set_bit(BitTable& t, std::uint64_t idx) {
  t[idx >> 6] |= std::uint64_t{1} << (idx & 63);
}

inline void clear_bit(BitTable& t, std::uint64_t idx) {
  t[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
}

// Permutes a table by exchanging address bits p and q: on return,
// new_table[i] == old_table[i with bits p and q exchanged], for all i < 2^nbits.
// Requires 0 <= p, q < nbits. Zero padding in the last word is preserved.
void swap_index_bits(BitTable& t, int nbits, int p, int q);

// Rewrites the low k_in address bits of a table through a fixed relation on
// small tuples, OR-accumulating over relation members:
//
//   out[(h << k_out) | v] = OR over u of ( in[(h << k_in) | u] AND rel(u, v) )
//
// where rel(u, v) is bit (u << k_out) | v of rel_bits. The input table has
// total_bits_in address bits; the result has total_bits_in - k_in + k_out.
// Requires 0 <= k_in, k_out <= 4, k_out - k_in <= 2, k_in + k_out <= 5 (so the
// relation fits in rel_bits), total_bits_in >= k_in.
BitTable apply_local_relation(const BitTable& in, int total_bits_in, int k_in,
                              int k_out, std::uint32_t rel_bits);

}  // namespace sata
