#include "bits.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>

namespace sata {

namespace {

// kPosMask[b]: within one 64-bit word, the set of bit positions whose index
// has address bit b set.
constexpr std::uint64_t kPosMask[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace

void swap_index_bits(BitTable& t, int nbits, int p, int q) {
  assert(0 <= p && p < nbits && 0 <= q && q < nbits);
  if (p == q) return;
  if (p > q) std::swap(p, q);
  if (q < 6) {
    // Both address bits live inside each word: delta-swap every word.
    const int d = (1 << q) - (1 << p);
    const std::uint64_t m = kPosMask[p] & ~kPosMask[q];
    for (std::uint64_t& w : t) {
      const std::uint64_t x = (w ^ (w >> d)) & m;
      w ^= x ^ (x << d);
    }
    return;
  }
  if (p < 6) {
    // Bit p is a within-word position, bit q selects between word pairs.
    // Address (k|s)*64 + y pairs with k*64 + (y + 2^p) where y has bit p clear.
    const std::size_t s = std::size_t{1} << (q - 6);
    const int shift = 1 << p;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k & s) continue;
      std::uint64_t& a = t[k];
      std::uint64_t& b = t[k | s];
      const std::uint64_t x = ((a >> shift) ^ b) & ~kPosMask[p];
      b ^= x;
      a ^= x << shift;
    }
    return;
  }
  // Both bits select words: swap whole words.
  const std::size_t sp = std::size_t{1} << (p - 6);
  const std::size_t sq = std::size_t{1} << (q - 6);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if ((k & sp) && !(k & sq)) std::swap(t[k], t[(k ^ sp) | sq]);
  }
}

namespace {

using ChunkLut = std::array<std::uint64_t, 1u << 16>;

// Builds the lookup table mapping a 16-bit slice of input entries to the
// corresponding slice of output entries. Input bit j of a chunk encodes the
// entry at local address j = (h_local << k_in) | u; it contributes the output
// pattern {v : rel(u, v)} at group offset h_local << k_out.
std::shared_ptr<const ChunkLut> chunk_lut(int k_in, int k_out,
                                          std::uint32_t rel_bits) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const ChunkLut>> cache;
  const std::uint32_t key = (std::uint32_t(k_in) << 20) |
                            (std::uint32_t(k_out) << 16) | rel_bits;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const std::uint32_t u_mask = (1u << k_in) - 1;
  std::array<std::uint64_t, 16> group_out{};  // output pattern per input value
  for (std::uint32_t u = 0; u <= u_mask; ++u) {
    std::uint64_t pat = 0;
    for (std::uint32_t v = 0; v < (1u << k_out); ++v) {
      if ((rel_bits >> ((u << k_out) | v)) & 1u) pat |= std::uint64_t{1} << v;
    }
    group_out[u] = pat;
  }
  std::array<std::uint64_t, 16> contrib{};  // contribution of input chunk bit j
  for (int j = 0; j < 16; ++j) {
    contrib[j] = group_out[j & u_mask] << ((std::uint64_t(j) >> k_in) << k_out);
  }
  auto lut = std::make_shared<ChunkLut>();
  (*lut)[0] = 0;
  for (std::uint32_t c = 1; c < (1u << 16); ++c) {
    const int low = std::countr_zero(c);
    (*lut)[c] = (*lut)[c & (c - 1)] | contrib[low];
  }
  cache.emplace(key, lut);
  return lut;
}

}  // namespace

BitTable apply_local_relation(const BitTable& in, int total_bits_in, int k_in,
                              int k_out, std::uint32_t rel_bits) {
  assert(0 <= k_in && k_in <= 4 && 0 <= k_out && k_out <= 4);
  assert(k_out - k_in <= 2);
  assert(k_in + k_out <= 5);
  assert(total_bits_in >= k_in);
  const int total_bits_out = total_bits_in - k_in + k_out;
  BitTable out = make_table(total_bits_out);
  const auto lut = chunk_lut(k_in, k_out, rel_bits);
  const int out_chunk_bits = (16 >> k_in) << k_out;  // at most 64
  // One chunk covers input addresses [c*16, c*16+16); the zero padding above
  // 2^total_bits_in only ever produces zero output, so a single chunk suffices
  // for small tables.
  const std::size_t n_chunks =
      total_bits_in <= 4 ? 1 : (std::size_t{1} << (total_bits_in - 4));
  for (std::size_t c = 0; c < n_chunks; ++c) {
    const std::uint64_t chunk16 = (in[c >> 2] >> ((c & 3) * 16)) & 0xFFFFu;
    if (!chunk16) continue;
    const std::uint64_t bits = (*lut)[chunk16];
    const std::uint64_t off = c * std::uint64_t(out_chunk_bits);
    if (out_chunk_bits == 64) {
      out[off >> 6] |= bits;
    } else {
      out[off >> 6] |= bits << (off & 63);
    }
  }
  return out;
}

}  // namespace sata
