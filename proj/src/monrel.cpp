#include "monrel.hpp"

#include <bit>
#include <utility>

#include "json.hpp"

namespace sata {

namespace {

// OR a contiguous run of len_bits (a power of two) from src into dst. Runs of
// 64 or more bits are word-aligned because both offsets are multiples of len.
void or_run(BitTable& dst, std::uint64_t dst_off, const BitTable& src,
            std::uint64_t src_off, std::uint64_t len_bits) {
  if (len_bits >= 64) {
    const std::size_t dw = dst_off >> 6, sw = src_off >> 6, nw = len_bits >> 6;
    for (std::size_t i = 0; i < nw; ++i) dst[dw + i] |= src[sw + i];
    return;
  }
  const std::uint64_t mask = (std::uint64_t{1} << len_bits) - 1;
  const std::uint64_t piece = (src[src_off >> 6] >> (src_off & 63)) & mask;
  dst[dst_off >> 6] |= piece << (dst_off & 63);
}

std::string bit_string(std::uint64_t v, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((v >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

}  // namespace

void check_width_cap(int bits_needed, const Options& opt, const char* what) {
  if (bits_needed > opt.max_width) {
    fail(ErrorCode::WidthCap, "width cap exceeded: ", what, " needs ",
         bits_needed, " table bits but the cap is ", opt.max_width,
         " (raise it with --max-width)");
  }
}

std::uint64_t MonRel::size() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : bits) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

MonRel rel_identity(int k, const Options& opt) {
  check_width_cap(2 * k, opt, "identity relation");
  MonRel r(k, k);
  const std::uint64_t lim = std::uint64_t{1} << k;
  for (std::uint64_t x = 0; x < lim; ++x) {
    for (std::uint64_t y = x;; y = (y + 1) | x) {  // supersets of x
      r.insert(x, y);
      if (y == lim - 1) break;
    }
  }
  return r;
}

MonRel rel_symmetry(int k1, int k2, const Options& opt) {
  check_width_cap(2 * (k1 + k2), opt, "symmetry relation");
  MonRel r(k1 + k2, k1 + k2);
  const std::uint64_t lim = std::uint64_t{1} << (k1 + k2);
  const std::uint64_t m1 = (std::uint64_t{1} << k1) - 1;
  for (std::uint64_t x = 0; x < lim; ++x) {
    const std::uint64_t lo = x & m1, hi = x >> k1;
    for (std::uint64_t y = 0; y < lim; ++y) {
      // after the crossing, x's first block must sit below y's second block
      if ((lo & ~(y >> k2)) == 0 && (hi & ~(y & ((std::uint64_t{1} << k2) - 1))) == 0) {
        r.insert(x, y);
      }
    }
  }
  return r;
}

MonRel rel_total(int m, int n, const Options& opt) {
  check_width_cap(m + n, opt, "total relation");
  MonRel r(m, n);
  const std::uint64_t entries = std::uint64_t{1} << (m + n);
  for (std::size_t w = 0; w < r.bits.size(); ++w) r.bits[w] = ~std::uint64_t{0};
  if (m + n < 6) r.bits[0] = (std::uint64_t{1} << entries) - 1;
  return r;
}

MonRel rel_empty(int m, int n, const Options& opt) {
  check_width_cap(m + n, opt, "empty relation");
  return MonRel(m, n);
}

MonRel rel_from_pairs(int m, int n,
                      const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                      const Options& opt) {
  check_width_cap(m + n, opt, "relation from pairs");
  MonRel r(m, n);
  for (const auto& [x, y] : pairs) {
    if (x >> m != 0 || y >> n != 0) {
      fail(ErrorCode::InvalidArgument, "pair (", x, ", ", y,
           ") out of range for a ", m, " -> ", n, " relation");
    }
    r.insert(x, y);
  }
  for (const auto& [x, y] : pairs) {
    for (int i = 0; i < m; ++i) {
      if (((x >> i) & 1u) && !r.contains(x & ~(std::uint64_t{1} << i), y)) {
        fail(ErrorCode::NotMonotone, "pair set is not monotone: contains (", x,
             ", ", y, ") but not (", x & ~(std::uint64_t{1} << i), ", ", y, ")");
      }
    }
    for (int j = 0; j < n; ++j) {
      if (!((y >> j) & 1u) && !r.contains(x, y | (std::uint64_t{1} << j))) {
        fail(ErrorCode::NotMonotone, "pair set is not monotone: contains (", x,
             ", ", y, ") but not (", x, ", ", y | (std::uint64_t{1} << j), ")");
      }
    }
  }
  return r;
}

MonRel rel_graph_of(const MonFunc& f, const Options& opt) {
  check_width_cap(f.m + f.n, opt, "relation of a function");
  if (f.table.size() != (std::size_t{1} << f.m)) {
    fail(ErrorCode::WidthMismatch, "function table has ", f.table.size(),
         " entries, expected ", std::size_t{1} << f.m);
  }
  MonRel r(f.m, f.n);
  const std::uint64_t xlim = std::uint64_t{1} << f.m;
  const std::uint64_t ylim = std::uint64_t{1} << f.n;
  for (std::uint64_t x = 0; x < xlim; ++x) {
    if (f.table[x] >> f.n != 0) {
      fail(ErrorCode::InvalidArgument, "function value ", f.table[x],
           " out of range for ", f.n, " output wires");
    }
    for (std::uint64_t y = 0; y < ylim; ++y) {
      if ((f.table[x] & ~y) == 0) r.insert(x, y);
    }
  }
  return r;
}

MonRel rel_seq(const MonRel& a, const MonRel& b, const Options& opt) {
  if (a.n != b.m) {
    fail(ErrorCode::WidthMismatch, "cannot compose a ", a.m, " -> ", a.n,
         " relation with a ", b.m, " -> ", b.n, " relation");
  }
  check_width_cap(a.m + a.n + b.n, opt, "relation composition");
  MonRel r(a.m, b.n);
  const std::uint64_t xlim = std::uint64_t{1} << a.m;
  const std::uint64_t ylim = std::uint64_t{1} << a.n;
  const std::uint64_t row = std::uint64_t{1} << b.n;
  for (std::uint64_t x = 0; x < xlim; ++x) {
    for (std::uint64_t y = 0; y < ylim; ++y) {
      if (a.contains(x, y)) or_run(r.bits, x << b.n, b.bits, y << b.n, row);
    }
  }
  return r;
}

MonRel rel_par(const MonRel& a, const MonRel& b, const Options& opt) {
  const int m = a.m + b.m, n = a.n + b.n;
  check_width_cap(m + n, opt, "relation tensor");
  MonRel r(m, n);
  const std::uint64_t xa_lim = std::uint64_t{1} << a.m;
  const std::uint64_t xb_lim = std::uint64_t{1} << b.m;
  const std::uint64_t ya_lim = std::uint64_t{1} << a.n;
  const std::uint64_t yb_lim = std::uint64_t{1} << b.n;
  for (std::uint64_t xb = 0; xb < xb_lim; ++xb) {
    for (std::uint64_t xa = 0; xa < xa_lim; ++xa) {
      const std::uint64_t x = xa | (xb << a.m);
      for (std::uint64_t yb = 0; yb < yb_lim; ++yb) {
        if (!b.contains(xb, yb)) continue;
        for (std::uint64_t ya = 0; ya < ya_lim; ++ya) {
          if (a.contains(xa, ya)) r.insert(x, ya | (yb << a.n));
        }
      }
    }
  }
  return r;
}

bool rel_leq(const MonRel& a, const MonRel& b) {
  if (a.m != b.m || a.n != b.n) {
    fail(ErrorCode::WidthMismatch, "cannot compare a ", a.m, " -> ", a.n,
         " relation with a ", b.m, " -> ", b.n, " relation");
  }
  for (std::size_t w = 0; w < a.bits.size(); ++w) {
    if (a.bits[w] & ~b.bits[w]) return false;
  }
  return true;
}

bool rel_equal(const MonRel& a, const MonRel& b) {
  if (a.m != b.m || a.n != b.n) {
    fail(ErrorCode::WidthMismatch, "cannot compare a ", a.m, " -> ", a.n,
         " relation with a ", b.m, " -> ", b.n, " relation");
  }
  return a.bits == b.bits;
}

bool is_monotone(const MonRel& r) {
  const std::uint64_t xlim = std::uint64_t{1} << r.m;
  const std::uint64_t ylim = std::uint64_t{1} << r.n;
  for (std::uint64_t x = 0; x < xlim; ++x) {
    for (std::uint64_t y = 0; y < ylim; ++y) {
      if (!r.contains(x, y)) continue;
      for (int i = 0; i < r.m; ++i) {
        if (((x >> i) & 1u) && !r.contains(x & ~(std::uint64_t{1} << i), y)) return false;
      }
      for (int j = 0; j < r.n; ++j) {
        if (!((y >> j) & 1u) && !r.contains(x, y | (std::uint64_t{1} << j))) return false;
      }
    }
  }
  return true;
}

bool is_monotone(int m, int n, const std::vector<std::uint64_t>& raw_bits) {
  if (m < 0 || n < 0) {
    fail(ErrorCode::InvalidArgument, "negative wire count");
  }
  if (raw_bits.size() != table_words(m + n)) {
    fail(ErrorCode::WidthMismatch, "raw table has ", raw_bits.size(),
         " words, expected ", table_words(m + n), " for ", m + n, " wires");
  }
  if (m + n < 6) {
    const std::uint64_t valid = (std::uint64_t{1} << (m + n)) ;
    if (raw_bits[0] >> valid != 0) {
      fail(ErrorCode::InvalidArgument, "raw table has bits set beyond entry ",
           (std::uint64_t{1} << (m + n)) - 1);
    }
  }
  MonRel r;
  r.m = m;
  r.n = n;
  r.bits = raw_bits;
  return is_monotone(r);
}

bool represents(const MonRel& r, const MonFunc& f) {
  if (r.m != f.m || r.n != f.n) {
    fail(ErrorCode::WidthMismatch, "relation is ", r.m, " -> ", r.n,
         " but function is ", f.m, " -> ", f.n);
  }
  if (f.table.size() != (std::size_t{1} << f.m)) {
    fail(ErrorCode::WidthMismatch, "function table has ", f.table.size(),
         " entries, expected ", std::size_t{1} << f.m);
  }
  const std::uint64_t xlim = std::uint64_t{1} << f.m;
  const std::uint64_t ylim = std::uint64_t{1} << f.n;
  for (std::uint64_t x = 0; x < xlim; ++x) {
    for (std::uint64_t y = 0; y < ylim; ++y) {
      if (r.contains(x, y) != ((f.table[x] & ~y) == 0)) return false;
    }
  }
  return true;
}

std::string emit_monrel_json(const MonRel& r) {
  nlohmann::ordered_json j;
  j["m"] = r.m;
  j["n"] = r.n;
  auto pairs = nlohmann::ordered_json::array();
  const std::uint64_t xlim = std::uint64_t{1} << r.m;
  const std::uint64_t ylim = std::uint64_t{1} << r.n;
  for (std::uint64_t x = 0; x < xlim; ++x) {
    for (std::uint64_t y = 0; y < ylim; ++y) {
      if (r.contains(x, y)) {
        pairs.push_back({bit_string(x, r.m), bit_string(y, r.n)});
      }
    }
  }
  j["pairs"] = std::move(pairs);
  return j.dump();
}

}  // namespace sata
