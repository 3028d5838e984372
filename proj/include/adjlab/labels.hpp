#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "adjlab/errors.hpp"
#include "adjlab/graph.hpp"
#include "adjlab/json_io.hpp"

namespace adjlab {

// Bits to store any value in [0, maxval]; at least one bit.
inline int field_width(long long maxval) {
  if (maxval < 0) throw InvalidInput("field_width of negative bound", 0);
  return std::max(1, (int)std::bit_width(static_cast<std::uint64_t>(maxval)));
}

// Index field width shared by every component of a labeling of n vertices.
inline int width_for(int n) { return field_width(n); }

struct Label {
  int bits = 0;
  std::vector<std::uint8_t> bytes;  // big-endian bit packing, MSB first
};

inline int label_bit(const Label& l, int i) {
  return (l.bytes[static_cast<std::size_t>(i) / 8] >> (7 - i % 8)) & 1;
}

class BitWriter {
 public:
  void put(std::uint64_t value, int width) {
    if (width < 0 || width > 64)
      throw InvalidInput("field width out of range", width);
    if (width < 64 && (value >> width) != 0)
      throw InternalCheck("field value overflows its width");
    for (int i = width - 1; i >= 0; --i) push_bit((value >> i) & 1);
  }
  void append(const Label& l) {
    for (int i = 0; i < l.bits; ++i) push_bit(label_bit(l, i));
  }
  Label take() { return std::move(out_); }

 private:
  void push_bit(std::uint64_t b) {
    if (out_.bits % 8 == 0) out_.bytes.push_back(0);
    if (b) out_.bytes.back() |= static_cast<std::uint8_t>(0x80u >> (out_.bits % 8));
    ++out_.bits;
  }
  Label out_;
};

class BitReader {
 public:
  explicit BitReader(const Label& l, int pos = 0) : lab_(&l), pos_(pos) {}
  std::uint64_t get(int width) {
    if (pos_ + width > lab_->bits) throw MalformedLabel("label payload truncated");
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | label_bit(*lab_, pos_++);
    return v;
  }
  int pos() const { return pos_; }
  const Label& label() const { return *lab_; }

 private:
  const Label* lab_;
  int pos_;
};

// ---- scheme descriptors ----------------------------------------------------

enum class SchemeKind {
  edgeless,
  star,
  chain,
  biclique_union,
  cover,
  split,
  complemented,
  chain_partition,
};

inline std::string scheme_kind_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::edgeless: return "edgeless";
    case SchemeKind::star: return "star";
    case SchemeKind::chain: return "chain";
    case SchemeKind::biclique_union: return "biclique-union";
    case SchemeKind::cover: return "cover";
    case SchemeKind::split: return "split";
    case SchemeKind::complemented: return "complemented";
    case SchemeKind::chain_partition: return "chain-partition";
  }
  throw InternalCheck("unknown scheme kind");
}

inline SchemeKind scheme_kind_from_name(const std::string& s) {
  for (SchemeKind k :
       {SchemeKind::edgeless, SchemeKind::star, SchemeKind::chain,
        SchemeKind::biclique_union, SchemeKind::cover, SchemeKind::split,
        SchemeKind::complemented, SchemeKind::chain_partition})
    if (scheme_kind_name(k) == s) return k;
  throw InvalidInput("unknown scheme kind: " + s, 0);
}

// Descriptor tree shared by all labels of one Labeling.  `children` holds the
// cover piece types (a piece id past the list reuses the last entry), or the
// single inner type of a split / complemented node.
struct SchemeNode {
  SchemeKind kind = SchemeKind::edgeless;
  int d = 0;          // split: flag list bound
  int c = 0;          // cover: per-vertex piece multiplicity bound
  bool bipartite = false;  // split: flags mean opposite-part (non-)neighbours
  int parts_cap = 0;  // chain_partition: part count the label format allows
  std::vector<SchemeNode> children;

  friend bool operator==(const SchemeNode& a, const SchemeNode& b) {
    return a.kind == b.kind && a.d == b.d && a.c == b.c &&
           a.bipartite == b.bipartite && a.parts_cap == b.parts_cap &&
           a.children == b.children;
  }
};

inline SchemeNode edgeless_node() { return {}; }
inline SchemeNode star_node() { return {SchemeKind::star, 0, 0, false, 0, {}}; }
inline SchemeNode chain_node() { return {SchemeKind::chain, 0, 0, false, 0, {}}; }
inline SchemeNode biclique_union_node() {
  return {SchemeKind::biclique_union, 0, 0, false, 0, {}};
}
inline SchemeNode cover_node(int c, std::vector<SchemeNode> piece_types) {
  if (piece_types.empty()) throw InvalidInput("cover needs a piece type", 0);
  return {SchemeKind::cover, 0, c, false, 0, std::move(piece_types)};
}
inline SchemeNode split_node(int d, bool bipartite, SchemeNode inner) {
  return {SchemeKind::split, d, 0, bipartite, 0, {std::move(inner)}};
}
inline SchemeNode complemented_node(SchemeNode inner) {
  return {SchemeKind::complemented, 0, 0, false, 0, {std::move(inner)}};
}
inline SchemeNode chain_partition_node(int parts_cap) {
  return {SchemeKind::chain_partition, 0, 0, false, parts_cap, {}};
}

inline const SchemeNode& cover_piece_type(const SchemeNode& cover, int pid) {
  std::size_t i = std::min<std::size_t>(pid, cover.children.size() - 1);
  return cover.children[i];
}

inline int cover_pid_width(const SchemeNode& cover, int w) {
  return std::max(w, field_width((long long)cover.children.size() - 1));
}

struct Labeling {
  int n = 0;
  int width = 1;
  SchemeNode scheme;
  std::vector<Label> labels;
};

// ---- universal decoder -----------------------------------------------------

namespace detail {

// Advance past one payload of `node`; every scheme's payload is sequentially
// parseable from the descriptor alone, so covers need no length fields.
inline void skip_payload(const SchemeNode& node, int w, BitReader& r) {
  switch (node.kind) {
    case SchemeKind::edgeless:
      return;
    case SchemeKind::star:
      r.get(1);
      return;
    case SchemeKind::chain:
      r.get(1 + w);
      return;
    case SchemeKind::biclique_union:
      r.get(w + 1);
      return;
    case SchemeKind::complemented:
      r.get(1);
      skip_payload(node.children.at(0), w, r);
      return;
    case SchemeKind::chain_partition: {
      int pw = field_width(node.parts_cap - 1);
      r.get(pw);
      r.get(1);
      for (int q = 0; q + 1 < node.parts_cap; ++q) r.get(w);
      return;
    }
    case SchemeKind::split: {
      if (node.bipartite) r.get(1);
      r.get(w);          // idx
      r.get(4 * w);      // two ranges
      int wd = field_width(node.d);
      for (int s = 0; s < 2; ++s) {
        r.get(1);
        auto cnt = r.get(wd);
        if ((int)cnt > node.d) throw MalformedLabel("split flag list too long");
        for (std::uint64_t i = 0; i < cnt; ++i) r.get(w);
      }
      skip_payload(node.children.at(0), w, r);
      return;
    }
    case SchemeKind::cover: {
      int wc = field_width(node.c);
      int pw = cover_pid_width(node, w);
      auto cnt = r.get(wc);
      if ((int)cnt > node.c) throw MalformedLabel("cover entry count exceeds c");
      long long prev = -1;
      for (std::uint64_t i = 0; i < cnt; ++i) {
        auto pid = r.get(pw);
        if ((long long)pid <= prev) throw MalformedLabel("cover pids not ascending");
        prev = (long long)pid;
        skip_payload(cover_piece_type(node, (int)pid), w, r);
      }
      return;
    }
  }
  throw InternalCheck("unknown scheme kind");
}

struct SplitFields {
  int side = 0;
  std::uint64_t idx = 0;
  std::uint64_t l_lo = 0, l_hi = 0, r_lo = 0, r_hi = 0;
  int mode[2] = {0, 0};  // 0 neighbours, 1 non-neighbours
  std::vector<std::uint64_t> list[2];
  int inner_pos = 0;
};

inline SplitFields parse_split(const SchemeNode& node, int w, BitReader& r) {
  SplitFields f;
  if (node.bipartite) f.side = (int)r.get(1);
  f.idx = r.get(w);
  f.l_lo = r.get(w);
  f.l_hi = r.get(w);
  f.r_lo = r.get(w);
  f.r_hi = r.get(w);
  int wd = field_width(node.d);
  for (int s = 0; s < 2; ++s) {
    f.mode[s] = (int)r.get(1);
    auto cnt = r.get(wd);
    if ((int)cnt > node.d) throw MalformedLabel("split flag list too long");
    for (std::uint64_t i = 0; i < cnt; ++i) f.list[s].push_back(r.get(w));
  }
  f.inner_pos = r.pos();
  return f;
}

inline bool in_range(std::uint64_t idx, std::uint64_t lo, std::uint64_t hi) {
  return lo <= idx && idx <= hi;
}

inline bool decode_node(const SchemeNode& node, int w, BitReader ra, BitReader rb);

// Flag lookup: does the A-vertex with fields `f` see the vertex with global
// index `idx` / side `side`, which lies in f's range on side s (0 left)?
inline bool split_flag_adjacent(const SchemeNode& node, const SplitFields& f,
                                int s, std::uint64_t idx, int side) {
  bool listed = false;
  for (auto v : f.list[s])
    if (v == idx) listed = true;
  if (f.mode[s] == 0) return listed;
  // non-neighbours mode: adjacent to the whole range except the listed ones;
  // bipartite flags speak only about the opposite part
  if (node.bipartite && side == f.side) return false;
  return !listed;
}

inline bool decode_split(const SchemeNode& node, int w, BitReader ra,
                         BitReader rb) {
  SplitFields a = parse_split(node, w, ra);
  SplitFields b = parse_split(node, w, rb);
  if (a.idx == b.idx) throw SameVertexQuery();
  if (a.l_lo == b.l_lo && a.l_hi == b.l_hi && a.r_lo == b.r_lo &&
      a.r_hi == b.r_hi) {
    // empty ranges are anchored at the residual's endpoints, so equal range
    // pairs identify one recursion node and both vertices sit in its core set
    return decode_node(node.children.at(0), w, BitReader(ra.label(), a.inner_pos),
                       BitReader(rb.label(), b.inner_pos));
  }
  if (in_range(b.idx, a.l_lo, a.l_hi))
    return split_flag_adjacent(node, a, 0, b.idx, b.side);
  if (in_range(b.idx, a.r_lo, a.r_hi))
    return split_flag_adjacent(node, a, 1, b.idx, b.side);
  if (in_range(a.idx, b.l_lo, b.l_hi))
    return split_flag_adjacent(node, b, 0, a.idx, a.side);
  if (in_range(a.idx, b.r_lo, b.r_hi))
    return split_flag_adjacent(node, b, 1, a.idx, a.side);
  return false;  // separated by some B1 | B2 split
}

inline bool decode_cover(const SchemeNode& node, int w, BitReader ra,
                         BitReader rb) {
  int wc = field_width(node.c);
  int pw = cover_pid_width(node, w);
  auto parse_entries = [&](BitReader& r) {
    std::vector<std::pair<std::uint64_t, int>> out;  // (pid, payload start)
    auto cnt = r.get(wc);
    if ((int)cnt > node.c) throw MalformedLabel("cover entry count exceeds c");
    long long prev = -1;
    for (std::uint64_t i = 0; i < cnt; ++i) {
      auto pid = r.get(pw);
      if ((long long)pid <= prev) throw MalformedLabel("cover pids not ascending");
      prev = (long long)pid;
      out.emplace_back(pid, r.pos());
      skip_payload(cover_piece_type(node, (int)pid), w, r);
    }
    return out;
  };
  auto ea = parse_entries(ra);
  auto eb = parse_entries(rb);
  std::size_t i = 0, j = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].first < eb[j].first) {
      ++i;
    } else if (eb[j].first < ea[i].first) {
      ++j;
    } else {
      const SchemeNode& piece = cover_piece_type(node, (int)ea[i].first);
      if (decode_node(piece, w, BitReader(ra.label(), ea[i].second),
                      BitReader(rb.label(), eb[j].second)))
        return true;
      ++i;
      ++j;
    }
  }
  return false;
}

inline bool decode_node(const SchemeNode& node, int w, BitReader ra,
                        BitReader rb) {
  switch (node.kind) {
    case SchemeKind::edgeless:
      return false;
    case SchemeKind::star: {
      auto ca = ra.get(1), cb = rb.get(1);
      if (ca && cb) throw SameVertexQuery();  // a star has one centre
      return ca != cb;
    }
    case SchemeKind::chain: {
      auto sa = ra.get(1), ia = ra.get(w);
      auto sb = rb.get(1), ib = rb.get(w);
      if (sa == sb) {
        if (sa == 0 && ia == ib) throw SameVertexQuery();  // ranks are unique
        return false;
      }
      auto a_rank = sa == 0 ? ia : ib;
      auto b_top = sa == 0 ? ib : ia;
      return b_top >= a_rank && a_rank >= 1;
    }
    case SchemeKind::biclique_union: {
      auto ca = ra.get(w), sa = ra.get(1);
      auto cb = rb.get(w), sb = rb.get(1);
      return ca == cb && ca != 0 && sa != sb;  // component 0 holds isolated vertices
    }
    case SchemeKind::complemented: {
      auto sa = ra.get(1), sb = rb.get(1);
      if (sa == sb) return false;  // complement is taken across parts only
      return !decode_node(node.children.at(0), w, ra, rb);
    }
    case SchemeKind::chain_partition: {
      int pw = field_width(node.parts_cap - 1);
      auto parse = [&](BitReader& r) {
        std::uint64_t part = r.get(pw);
        std::uint64_t type = r.get(1);
        std::vector<std::uint64_t> ranks;
        for (int q = 0; q + 1 < node.parts_cap; ++q) ranks.push_back(r.get(w));
        if (part >= (std::uint64_t)node.parts_cap)
          throw MalformedLabel("part id out of range");
        return std::tuple(part, type, ranks);
      };
      auto [pa, ta, ranks_a] = parse(ra);
      auto [pb, tb, ranks_b] = parse(rb);
      if (pa == pb) return ta && tb;  // homogeneous part: clique or independent
      // cross pair: the smaller part id plays the chain's ranked side
      auto slot = [](std::uint64_t mine, std::uint64_t other) {
        return (int)(other < mine ? other : other - 1);
      };
      auto rank_a = ranks_a[slot(pa, pb)];
      auto rank_b = ranks_b[slot(pb, pa)];
      auto lo_rank = pa < pb ? rank_a : rank_b;
      auto hi_top = pa < pb ? rank_b : rank_a;
      return lo_rank >= 1 && hi_top >= lo_rank;
    }
    case SchemeKind::split:
      return decode_split(node, w, ra, rb);
    case SchemeKind::cover:
      return decode_cover(node, w, ra, rb);
  }
  throw InternalCheck("unknown scheme kind");
}

}  // namespace detail

// Pure function of the two payloads under a shared descriptor.  Throws
// SameVertexQuery when the labels provably name one vertex, MalformedLabel
// when a payload cannot be parsed.
inline bool decode_adjacent(const SchemeNode& scheme, int width, const Label& a,
                            const Label& b) {
  return detail::decode_node(scheme, width, BitReader(a), BitReader(b));
}

inline bool decode_adjacent(const Labeling& L, int u, int v) {
  return decode_adjacent(L.scheme, L.width, L.labels.at(u), L.labels.at(v));
}

// ---- verifier ---------------------------------------------------------------

struct VerifyReport {
  std::vector<std::pair<int, int>> mismatches;
  int pairs = 0;
  int max_bits = 0;
  double ratio = 0.0;  // max_bits / ceil(log2(n+1))
  bool ok() const { return mismatches.empty(); }
};

// Checks every pair against decode_adjacent; decoder errors on a distinct
// pair count as mismatches, never as exceptions.
inline VerifyReport verify_labeling(const Graph& g, const Labeling& L) {
  VerifyReport rep;
  if (L.n != g.n || (int)L.labels.size() != g.n)
    throw InvalidInput("labeling size differs from graph", L.labels.size());
  for (const Label& l : L.labels) rep.max_bits = std::max(rep.max_bits, l.bits);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      ++rep.pairs;
      bool got;
      try {
        got = decode_adjacent(L, u, v);
      } catch (const Error&) {
        rep.mismatches.emplace_back(u, v);
        continue;
      }
      if (got != g.adjacent(u, v)) rep.mismatches.emplace_back(u, v);
    }
  rep.ratio = (double)rep.max_bits / (double)width_for(g.n);
  return rep;
}

// ---- serialization ----------------------------------------------------------

inline std::string label_hex(const Label& l) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : l.bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

inline Label label_from_hex(const std::string& hex, int bits) {
  if (bits < 0 || (int)hex.size() != 2 * ((bits + 7) / 8))
    throw InvalidInput("hex payload length disagrees with bit count", hex.size());
  Label l;
  l.bits = bits;
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw InvalidInput(std::string("bad hex digit: ") + c, 0);
  };
  for (std::size_t i = 0; i < hex.size(); i += 2)
    l.bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  // padding bits past `bits` must be zero
  for (int i = bits; i < 8 * (int)l.bytes.size(); ++i)
    if (label_bit(l, i)) throw InvalidInput("nonzero padding bits", i);
  return l;
}

inline nlohmann::json scheme_to_json(const SchemeNode& node) {
  nlohmann::json j;
  j["kind"] = scheme_kind_name(node.kind);
  if (node.d) j["d"] = node.d;
  if (node.c) j["c"] = node.c;
  if (node.bipartite) j["bipartite"] = true;
  if (node.parts_cap) j["parts_cap"] = node.parts_cap;
  if (!node.children.empty()) {
    nlohmann::json kids = nlohmann::json::array();
    for (const SchemeNode& ch : node.children) kids.push_back(scheme_to_json(ch));
    j["children"] = std::move(kids);
  }
  return j;
}

inline SchemeNode scheme_from_json(const nlohmann::json& j) {
  SchemeNode node;
  node.kind = scheme_kind_from_name(j.at("kind").get<std::string>());
  node.d = j.value("d", 0);
  node.c = j.value("c", 0);
  node.bipartite = j.value("bipartite", false);
  node.parts_cap = j.value("parts_cap", 0);
  if (j.contains("children"))
    for (const auto& ch : j.at("children")) node.children.push_back(scheme_from_json(ch));
  return node;
}

inline nlohmann::json labeling_to_json(const Labeling& L) {
  nlohmann::json j;
  j["scheme"] = scheme_kind_name(L.scheme.kind);
  j["params"] = scheme_to_json(L.scheme);
  j["n"] = L.n;
  j["width"] = L.width;
  nlohmann::json hex = nlohmann::json::array(), bits = nlohmann::json::array();
  for (const Label& l : L.labels) {
    hex.push_back(label_hex(l));
    bits.push_back(l.bits);
  }
  j["labels"] = std::move(hex);
  j["bits"] = std::move(bits);
  return j;
}

inline Labeling labeling_from_json(const nlohmann::json& j) {
  Labeling L;
  L.n = j.at("n").get<int>();
  L.width = j.at("width").get<int>();
  L.scheme = scheme_from_json(j.at("params"));
  const auto& hex = j.at("labels");
  const auto& bits = j.at("bits");
  if (hex.size() != bits.size() || (int)hex.size() != L.n)
    throw InvalidInput("labels/bits arrays disagree with n", hex.size());
  for (std::size_t i = 0; i < hex.size(); ++i)
    L.labels.push_back(label_from_hex(hex[i].get<std::string>(), bits[i].get<int>()));
  return L;
}

}  // namespace adjlab
