#include "glc/gadget_dd.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "glc/errors.hpp"
#include "glc/families.hpp"
#include "hash.hpp"

namespace glc {

namespace {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::nullopt;
  return a * b;
}

std::vector<Colour> image_of(const std::vector<std::vector<Colour>>& a_lists,
                             const std::vector<std::size_t>& digits) {
  std::vector<Colour> image(digits.size());
  for (std::size_t j = 0; j < digits.size(); ++j) image[j] = a_lists[j][digits[j]];
  std::sort(image.begin(), image.end());
  return image;
}

// Advances list-position digits in lexicographic order; false after the last.
bool next_digits(std::vector<std::size_t>& digits, std::size_t base) {
  for (std::size_t j = digits.size(); j-- > 0;) {
    if (++digits[j] < base) return true;
    digits[j] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::uint64_t> gadget_bound(std::size_t m, std::size_t d) {
  std::optional<std::uint64_t> power = 1;
  for (std::size_t i = 0; i < m && power; ++i) power = checked_mul(*power, m);
  auto block = checked_mul(d, m);
  if (!power || !block || *block == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return checked_mul(*block + 1, *power);
}

std::vector<std::size_t> colouring_digits(std::uint64_t t, std::size_t m) {
  std::vector<std::size_t> digits(m, 0);
  for (std::size_t j = m; j-- > 0;) {
    digits[j] = static_cast<std::size_t>(t % m);
    t /= m;
  }
  return digits;
}

Gadget build_gadget(std::size_t m, std::size_t d, std::optional<std::size_t> n,
                    std::uint64_t max_vertices) {
  if (m == 0) throw std::invalid_argument("gadget needs m >= 1");
  const auto bound = gadget_bound(m, d);
  if (!bound || *bound > max_vertices) {
    throw std::invalid_argument("gadget bound (dm+1)*m^m exceeds the supported size");
  }
  const std::size_t size_b = n.value_or(*bound);
  if (size_b < *bound) {
    throw std::invalid_argument("n = " + std::to_string(size_b) + " is below (dm+1)*m^m = " +
                                std::to_string(*bound));
  }

  GadgetSpec spec;
  spec.m = m;
  spec.d = d;
  spec.n = size_b;
  spec.a_lists.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) spec.a_lists[j].push_back(static_cast<Colour>(j * m + i));
  }
  const std::size_t block = spec.block_size();
  const std::uint64_t colourings = *bound / block;
  spec.blocks.resize(colourings);
  for (std::uint64_t t = 0; t < colourings; ++t) {
    auto& b = spec.blocks[t];
    for (std::size_t i = 0; i < block; ++i) b.push_back(static_cast<Vertex>(m + t * block + i));
  }
  for (std::size_t i = 0; i < m; ++i) spec.leftover_colours.push_back(static_cast<Colour>(m * m + i));

  std::vector<std::vector<Colour>> lists(m + size_b);
  for (std::size_t j = 0; j < m; ++j) lists[j] = spec.a_lists[j];
  std::vector<std::size_t> digits(m, 0);
  std::uint64_t t = 0;
  do {
    auto image = image_of(spec.a_lists, digits);
    for (Vertex v : spec.blocks[t]) lists[v] = image;
    ++t;
  } while (next_digits(digits, m));
  for (std::size_t v = m + *bound; v < m + size_b; ++v) lists[v] = spec.leftover_colours;

  return Gadget{make_complete_bipartite(m, size_b), ListAssignment(std::move(lists)),
                std::move(spec)};
}

bool verify_gadget_structure(const GadgetSpec& spec, const Graph& g, const ListAssignment& lists) {
  const std::size_t m = spec.m;
  if (m == 0 || g.vertex_count() != m + spec.n || lists.size() != g.vertex_count() ||
      spec.a_lists.size() != m) {
    throw std::invalid_argument("gadget spec, graph and lists disagree on dimensions");
  }
  // K_{m,n} with A = 0..m-1.
  if (g.edge_count() != m * spec.n) return false;
  for (Vertex a = 0; a < m; ++a) {
    if (g.degree(a) != spec.n) return false;
  }
  // A-lists: size m, pairwise disjoint, equal to the stored lists.
  std::vector<Colour> all_a;
  for (Vertex a = 0; a < m; ++a) {
    const auto list = lists[a];
    if (list.size() != m || !std::equal(list.begin(), list.end(), spec.a_lists[a].begin(),
                                        spec.a_lists[a].end())) {
      return false;
    }
    all_a.insert(all_a.end(), list.begin(), list.end());
  }
  std::sort(all_a.begin(), all_a.end());
  if (std::adjacent_find(all_a.begin(), all_a.end()) != all_a.end()) return false;

  // Blocks: one per colouring of A, size dm+1, pairwise disjoint, inside B.
  const auto bound = gadget_bound(m, spec.d);
  if (!bound || *bound > spec.n || spec.blocks.size() != *bound / spec.block_size()) return false;
  std::vector<bool> used(g.vertex_count(), false);
  std::uint64_t total = 0;
  for (const auto& block : spec.blocks) {
    if (block.size() != spec.block_size()) return false;
    for (Vertex v : block) {
      if (v < m || v >= g.vertex_count() || used[v]) return false;
      used[v] = true;
    }
    total += block.size();
  }
  if (total != *bound) return false;

  // Every colouring phi of A: each block vertex's list is exactly phi(A).
  // Lists are read from the assignment itself, not from the spec.
  std::vector<std::vector<Colour>> actual_a(m);
  for (Vertex a = 0; a < m; ++a) actual_a[a].assign(lists[a].begin(), lists[a].end());
  std::vector<std::size_t> digits(m, 0);
  std::uint64_t t = 0;
  do {
    const auto image = image_of(actual_a, digits);
    for (Vertex v : spec.blocks[t]) {
      const auto list = lists[v];
      if (!std::equal(list.begin(), list.end(), image.begin(), image.end())) return false;
    }
    ++t;
  } while (next_digits(digits, m));
  return t == spec.blocks.size();
}

bool verify_no_colouring_bruteforce(const Graph& g, const ListAssignment& lists, std::size_t d,
                                    std::uint64_t max_assignments) {
  if (lists.size() != g.vertex_count()) {
    throw std::invalid_argument("list assignment does not match the graph");
  }
  std::uint64_t product = 1;
  for (Vertex v = 0; v < lists.size(); ++v) {
    auto next = checked_mul(product, lists[v].size());
    if (!next || *next > max_assignments) {
      throw BudgetExceeded("brute force would enumerate more than " +
                           std::to_string(max_assignments) + " colourings");
    }
    product = *next;
  }
  const FamilySpec family = family::MaxDegree{d};
  std::vector<std::size_t> position(lists.size(), 0);
  std::vector<Colour> colours(lists.size());
  for (std::uint64_t i = 0; i < product; ++i) {
    for (Vertex v = 0; v < lists.size(); ++v) colours[v] = lists[v][position[v]];
    if (is_valid_colouring(g, Colouring(colours), family)) return false;
    for (std::size_t v = lists.size(); v-- > 0;) {
      if (++position[v] < lists[v].size()) break;
      position[v] = 0;
    }
  }
  return true;
}

void write_block_table(std::ostream& out, const GadgetSpec& spec) {
  out << "m " << spec.m << " d " << spec.d << " n " << spec.n << "\n";
  for (std::size_t j = 0; j < spec.a_lists.size(); ++j) {
    out << "A " << j;
    for (Colour c : spec.a_lists[j]) out << ' ' << c;
    out << "\n";
  }
  for (std::size_t t = 0; t < spec.blocks.size(); ++t) {
    out << "block " << t << " phi";
    for (auto digit : colouring_digits(t, spec.m)) out << ' ' << digit;
    out << " B " << spec.blocks[t].front() << ".." << spec.blocks[t].back() << "\n";
  }
  out << "leftover";
  for (Colour c : spec.leftover_colours) out << ' ' << c;
  out << "\n";
}

std::uint64_t block_table_checksum(const GadgetSpec& spec) {
  std::ostringstream text;
  write_block_table(text, spec);
  return detail::fnv1a(text.str());
}

}  // namespace glc
