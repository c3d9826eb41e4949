#include "overgroup/sections.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ovg {

FirstLevelAction pi0(KElement k, Symbol s) {
  // GF(2) functionals on (beta_b, beta_c, beta_x)
  static constexpr std::uint8_t masks[3] = {0b111, 0b101, 0b110};
  const int bit = std::popcount(std::uint8_t(k.bits() & masks[static_cast<int>(s)])) & 1;
  return bit ? FirstLevelAction::swap : FirstLevelAction::trivial;
}

bool even_a_parity(const ReducedWord& w) { return w.a_count() % 2 == 0; }

LevelOneSplit split_with_parity(const ReducedWord& w, const Oracle& o) {
  const Symbol s = o.symbol_at(1);
  std::vector<Letter> left, right;
  bool parity = false;  // a's seen so far, mod 2
  for (Letter l : w.letters()) {
    if (l.is_a()) {
      parity = !parity;
      continue;
    }
    const bool acts = pi0(l.kelem(), s) == FirstLevelAction::swap;
    // k contributes (pi0, k) to (left, right); a conjugation swaps the pair
    std::vector<Letter>& k_side = parity ? left : right;
    std::vector<Letter>& p_side = parity ? right : left;
    k_side.push_back(l);
    if (acts) p_side.push_back(Letter::a());
  }
  return LevelOneSplit{ReducedWord::reduce(left), ReducedWord::reduce(right), parity};
}

std::pair<ReducedWord, ReducedWord> split(const ReducedWord& w, const Oracle& o) {
  if (!even_a_parity(w)) {
    throw std::invalid_argument("split: word has odd a-parity (moves the level-1 vertices)");
  }
  LevelOneSplit s = split_with_parity(w, o);
  return {std::move(s.left), std::move(s.right)};
}

namespace {

std::string path_string(int level, std::size_t index) {
  std::string p(static_cast<std::size_t>(level), '0');
  for (int b = 0; b < level; ++b) {
    if (index & (std::size_t{1} << (level - 1 - b))) p[static_cast<std::size_t>(b)] = '1';
  }
  return p;
}

std::size_t path_index(std::string_view path) {
  std::size_t idx = 0;
  for (char c : path) {
    if (c != '0' && c != '1') throw std::invalid_argument("vertex path must be a bit string");
    idx = idx * 2 + static_cast<std::size_t>(c - '0');
  }
  return idx;
}

}  // namespace

const ReducedWord& SectionTree::at(std::string_view path) const {
  if (path.size() > static_cast<std::size_t>(depth)) {
    throw std::invalid_argument("path deeper than the tree");
  }
  return levels[path.size()][path_index(path)];
}

const std::optional<Letter>& Nucleus::at(std::string_view path) const {
  if (path.size() != static_cast<std::size_t>(depth)) {
    throw std::invalid_argument("nucleus entries live at exactly its depth");
  }
  return entries[path_index(path)];
}

DecomposeResult decompose(const ReducedWord& w, const Oracle& o, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  SectionTree tree;
  tree.depth = depth;
  tree.levels.assign(1, {w});
  Oracle level_oracle = o;
  for (int l = 0; l < depth; ++l) {
    const auto& cur = tree.levels.back();
    std::vector<ReducedWord> next;
    next.reserve(cur.size() * 2);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (!even_a_parity(cur[i])) {
        return NotInStabilizer{l, path_string(l, i)};
      }
      auto [left, right] = split(cur[i], level_oracle);
      next.push_back(std::move(left));
      next.push_back(std::move(right));
    }
    tree.levels.push_back(std::move(next));
    level_oracle = level_oracle.shift();
  }
  return tree;
}

int alpha_depth(std::size_t word_length) {
  if (word_length <= 1) return 0;
  return std::bit_width(word_length - 1);
}

NucleusResult nucleus_at(const ReducedWord& w, const Oracle& o, int depth) {
  DecomposeResult r = decompose(w, o, depth);
  if (auto* ns = std::get_if<NotInStabilizer>(&r)) return *ns;
  const auto& leaves = std::get<SectionTree>(r).levels.back();
  Nucleus n;
  n.depth = depth;
  n.entries.reserve(leaves.size());
  for (const auto& leaf : leaves) {
    if (leaf.length() > 1) {
      throw std::invalid_argument(
          "depth " + std::to_string(depth) + " leaves a section of length " +
          std::to_string(leaf.length()) + "; depth >= " +
          std::to_string(alpha_depth(w.length())) + " always suffices for this word");
    }
    n.entries.push_back(leaf.empty() ? std::nullopt : std::optional<Letter>(leaf.letters()[0]));
  }
  return n;
}

std::vector<std::uint32_t> level_permutation(const ReducedWord& w, const Oracle& o, int level) {
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
  std::vector<std::uint32_t> image(std::size_t{1} << level);
  std::vector<int> bits(static_cast<std::size_t>(level));
  for (std::uint32_t v = 0; v < image.size(); ++v) {
    for (int b = 0; b < level; ++b) {
      bits[static_cast<std::size_t>(b)] = (v >> (level - 1 - b)) & 1u;
    }
    for (Letter l : w.letters()) {
      if (level == 0) break;
      if (l.is_a()) {
        bits[0] ^= 1;
        continue;
      }
      // descend the right spine while the path keeps selecting the
      // self-similar copy; on a 0 the action below is pi0 (a swap of the
      // next coordinate, or nothing)
      KElement k = l.kelem();
      for (int pos = 0; pos < level; ++pos) {
        if (bits[static_cast<std::size_t>(pos)] == 1) continue;  // k carries on below vertex 1
        if (pi0(k, o.symbol_at(static_cast<std::size_t>(pos) + 1)) == FirstLevelAction::swap &&
            pos + 1 < level) {
          bits[static_cast<std::size_t>(pos) + 1] ^= 1;
        }
        break;
      }
    }
    std::uint32_t out = 0;
    for (int b = 0; b < level; ++b) {
      out = (out << 1) | static_cast<std::uint32_t>(bits[static_cast<std::size_t>(b)]);
    }
    image[v] = out;
  }
  return image;
}

nlohmann::json to_json(const SectionTree& t, const ReducedWord& w, const Oracle& o) {
  nlohmann::json sections = nlohmann::json::object();
  for (int l = 0; l <= t.depth; ++l) {
    for (std::size_t i = 0; i < t.levels[static_cast<std::size_t>(l)].size(); ++i) {
      sections[path_string(l, i)] = t.levels[static_cast<std::size_t>(l)][i].str();
    }
  }
  return {{"word", w.str()}, {"oracle", o.str()}, {"depth", t.depth}, {"sections", sections}};
}

nlohmann::json to_json(const Nucleus& n, const ReducedWord& w, const Oracle& o) {
  nlohmann::json entries = nlohmann::json::object();
  for (std::size_t i = 0; i < n.entries.size(); ++i) {
    entries[path_string(n.depth, i)] =
        n.entries[i] ? std::string(1, n.entries[i]->ch()) : std::string();
  }
  return {{"word", w.str()}, {"oracle", o.str()}, {"depth", n.depth}, {"entries", entries}};
}

nlohmann::json to_json(const NotInStabilizer& n, const ReducedWord& w, const Oracle& o) {
  return {{"word", w.str()},
          {"oracle", o.str()},
          {"not_in_stabilizer", {{"level", n.level}, {"vertex", n.vertex}}}};
}

namespace {

void dot_node(std::ostringstream& out, const std::string& path, const std::string& label) {
  out << "  r" << path << " [label=\"" << label << "\"];\n";
}

}  // namespace

std::string to_dot(const SectionTree& t) {
  std::ostringstream out;
  out << "digraph sections {\n  node [shape=box];\n";
  for (int l = 0; l <= t.depth; ++l) {
    for (std::size_t i = 0; i < t.levels[static_cast<std::size_t>(l)].size(); ++i) {
      const std::string& word = t.levels[static_cast<std::size_t>(l)][i].str();
      dot_node(out, path_string(l, i), word.empty() ? "e" : word);
    }
  }
  for (int l = 0; l < t.depth; ++l) {
    for (std::size_t i = 0; i < t.levels[static_cast<std::size_t>(l)].size(); ++i) {
      for (int b = 0; b <= 1; ++b) {
        out << "  r" << path_string(l, i) << " -> r" << path_string(l + 1, 2 * i + static_cast<std::size_t>(b))
            << " [label=\"" << b << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Nucleus& n) {
  std::ostringstream out;
  out << "digraph nucleus {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < n.entries.size(); ++i) {
    dot_node(out, path_string(n.depth, i),
             n.entries[i] ? std::string(1, n.entries[i]->ch()) : "e");
  }
  out << "}\n";
  return out.str();
}

}  // namespace ovg
