#include "interpret.hpp"

#include <algorithm>
#include <numeric>

namespace sata {

namespace {

bool generator_contains(Gen g, std::uint64_t x, std::uint64_t y) {
  switch (g) {
    case Gen::Copy:
      return (x & ~(y & 1)) == 0 && (x & ~(y >> 1)) == 0;
    case Gen::Discard:
      return true;
    case Gen::Cocopy:
      return ((x & 1) & ~y) == 0 && ((x >> 1) & ~y) == 0;
    case Gen::Codiscard:
      return true;
    case Gen::Conj:
      return (((x & 1) & (x >> 1)) & ~y) == 0;
    case Gen::Unit:
      return y == 1;
    case Gen::Coconj:
      return (x & ~((y & 1) | (y >> 1))) == 0;
    case Gen::Counit:
      return x == 0;
  }
  return false;
}

// Dense relation bits of a generator in apply_local_relation's layout:
// bit (u << k_out) | v set iff (u, v) is in the relation.
std::uint32_t generator_rel_bits(Gen g) {
  const int k_in = gen_dom(g), k_out = gen_cod(g);
  std::uint32_t bits = 0;
  for (std::uint32_t u = 0; u < (1u << k_in); ++u) {
    for (std::uint32_t v = 0; v < (1u << k_out); ++v) {
      if (generator_contains(g, u, v)) bits |= 1u << ((u << k_out) | v);
    }
  }
  return bits;
}

// Packs one table entry into the same layout, insisting on the generator's
// arity so slice bookkeeping stays valid.
std::uint32_t packed_rel_bits(Gen g, const MonRel& r) {
  if (r.m != gen_dom(g) || r.n != gen_cod(g)) {
    fail(ErrorCode::InvalidArgument, "generator table entry for ", gen_name(g),
         " has arity ", r.m, " -> ", r.n, ", expected ", gen_dom(g), " -> ",
         gen_cod(g));
  }
  std::uint32_t bits = 0;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << r.m); ++u) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << r.n); ++v) {
      if (r.contains(u, v)) bits |= 1u << ((u << r.n) | v);
    }
  }
  return bits;
}

}  // namespace

MonRel rel_of_generator(Gen g) {
  const int m = gen_dom(g), n = gen_cod(g);
  MonRel r(m, n);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
      if (generator_contains(g, x, y)) r.insert(x, y);
    }
  }
  return r;
}

const GeneratorTable& standard_generator_table() {
  static const GeneratorTable table = [] {
    GeneratorTable t;
    for (int g = 0; g < kGenCount; ++g) t[g] = rel_of_generator(static_cast<Gen>(g));
    return t;
  }();
  return table;
}

namespace {

MonRel sweep(const Diagram& d, const std::array<std::uint32_t, kGenCount>& gen_bits,
             const Options& opt) {
  const int m = d->dom;
  const std::vector<Step> steps = flatten_steps(d);

  // Check the whole width trace before touching memory: the state table keeps
  // the m input wires alongside the w live wires of the current slice.
  {
    int w = m;
    int peak = m + w;
    for (const Step& s : steps) {
      if (!s.is_swap) w += gen_cod(s.g) - gen_dom(s.g);
      peak = std::max(peak, m + w);
    }
    check_width_cap(peak, opt, "diagram evaluation");
  }

  // State: relation from the m inputs to the w live wires. Address bit j < w
  // is physical wire slot j; bits w.. hold the input tuple. log2phys tracks
  // where each wire of the current slice lives; crossings only permute it.
  int w = m;
  BitTable table = rel_identity(m, opt).bits;
  std::vector<int> log2phys(static_cast<std::size_t>(m));
  std::vector<int> phys2log(static_cast<std::size_t>(m));
  std::iota(log2phys.begin(), log2phys.end(), 0);
  std::iota(phys2log.begin(), phys2log.end(), 0);

  // Physically move logical wires base..base+count-1 into slots 0..count-1.
  auto hoist = [&](int base, int count) {
    for (int j = 0; j < count; ++j) {
      const int l = base + j;
      const int p = log2phys[static_cast<std::size_t>(l)];
      if (p == j) continue;  // slots below j hold already-placed wires, so p > j
      swap_index_bits(table, m + w, j, p);
      const int displaced = phys2log[static_cast<std::size_t>(j)];
      log2phys[static_cast<std::size_t>(displaced)] = p;
      phys2log[static_cast<std::size_t>(p)] = displaced;
      log2phys[static_cast<std::size_t>(l)] = j;
      phys2log[static_cast<std::size_t>(j)] = l;
    }
  };

  for (const Step& s : steps) {
    if (s.is_swap) {
      const int la = s.base, lb = s.base + 1;
      std::swap(log2phys[static_cast<std::size_t>(la)],
                log2phys[static_cast<std::size_t>(lb)]);
      phys2log[static_cast<std::size_t>(log2phys[static_cast<std::size_t>(la)])] = la;
      phys2log[static_cast<std::size_t>(log2phys[static_cast<std::size_t>(lb)])] = lb;
      continue;
    }
    const int k_in = gen_dom(s.g), k_out = gen_cod(s.g);
    hoist(s.base, k_in);
    table = apply_local_relation(table, m + w, k_in, k_out,
                                 gen_bits[static_cast<int>(s.g)]);
    // Slots >= k_in shifted by delta; slots 0..k_out-1 are the new outputs.
    const int delta = k_out - k_in;
    const int new_w = w + delta;
    std::vector<int> nl(static_cast<std::size_t>(new_w));
    for (int l = 0; l < s.base; ++l) {
      nl[static_cast<std::size_t>(l)] = log2phys[static_cast<std::size_t>(l)] + delta;
    }
    for (int j = 0; j < k_out; ++j) nl[static_cast<std::size_t>(s.base + j)] = j;
    for (int l = s.base + k_out; l < new_w; ++l) {
      nl[static_cast<std::size_t>(l)] =
          log2phys[static_cast<std::size_t>(l - delta)] + delta;
    }
    w = new_w;
    log2phys = std::move(nl);
    phys2log.assign(static_cast<std::size_t>(w), 0);
    for (int l = 0; l < w; ++l) {
      phys2log[static_cast<std::size_t>(log2phys[static_cast<std::size_t>(l)])] = l;
    }
  }

  hoist(0, w);  // restore wire order: logical wire j at address bit j
  MonRel r;
  r.m = m;
  r.n = w;
  r.bits = std::move(table);
  return r;
}

}  // namespace

MonRel interpret(const Diagram& d, const Options& opt) {
  static const std::array<std::uint32_t, kGenCount> standard_bits = [] {
    std::array<std::uint32_t, kGenCount> bits{};
    for (int g = 0; g < kGenCount; ++g) bits[g] = generator_rel_bits(static_cast<Gen>(g));
    return bits;
  }();
  return sweep(d, standard_bits, opt);
}

MonRel interpret_with_table(const Diagram& d, const GeneratorTable& table,
                            const Options& opt) {
  std::array<std::uint32_t, kGenCount> bits{};
  for (int g = 0; g < kGenCount; ++g) {
    bits[g] = packed_rel_bits(static_cast<Gen>(g), table[static_cast<std::size_t>(g)]);
  }
  return sweep(d, bits, opt);
}

MonRel interpret_reference(const Diagram& d, const GeneratorTable& table,
                           const Options& opt) {
  switch (d->kind) {
    case NodeKind::Empty: {
      MonRel r(0, 0);
      r.insert(0, 0);
      return r;
    }
    case NodeKind::Identity:
      return rel_identity(d->width, opt);
    case NodeKind::Swap:
      return rel_symmetry(1, 1, opt);
    case NodeKind::Generator:
      return table[static_cast<int>(d->gen)];
    case NodeKind::Seq:
      return rel_seq(interpret_reference(d->left, table, opt),
                     interpret_reference(d->right, table, opt), opt);
    case NodeKind::Par:
      return rel_par(interpret_reference(d->left, table, opt),
                     interpret_reference(d->right, table, opt), opt);
  }
  fail(ErrorCode::Internal, "unreachable diagram node kind");
}

}  // namespace sata
