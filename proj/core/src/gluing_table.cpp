#include "facenum/gluing_table.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "facenum/error.hpp"

namespace facenum {

std::string serialize(const Triangulation& t) {
  std::ostringstream out;
  out << "dim " << t.dim() << "\nfacets " << t.facet_count() << "\n";
  for (const Gluing& g : t.gluings()) {
    out << g.source.facet << ' ' << g.source.ridge << " -> " << g.target.facet << " (";
    for (int v = 0; v <= t.dim(); ++v) {
      if (v != g.source.ridge) out << label_symbol(g.correspondence[v]);
    }
    out << ")\n";
  }
  return out.str();
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

int parse_int(std::string_view word, int line, const char* what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(word) + "'");
  }
  return value;
}

std::optional<int> header_value(const std::vector<std::string_view>& words, std::string_view key,
                                int line) {
  if (words.size() != 2 || words[0] != key) return std::nullopt;
  return parse_int(words[1], line, key == "dim" ? "a dimension" : "a facet count");
}

}  // namespace

Triangulation parse_gluing_table(std::string_view text) {
  std::optional<int> dim;
  std::optional<Triangulation> t;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!dim) {
      dim = header_value(words, "dim", line_no);
      if (!dim) throw ParseError(line_no, "expected 'dim <d>'");
      if (*dim < 1) throw ParseError(line_no, "dimension must be at least 1");
      continue;
    }
    if (!t) {
      const auto n = header_value(words, "facets", line_no);
      if (!n) throw ParseError(line_no, "expected 'facets <n>'");
      if (*n < 0) throw ParseError(line_no, "facet count must be non-negative");
      t.emplace(*dim, *n);
      continue;
    }

    if (words.size() != 5 || words[2] != "->") {
      throw ParseError(line_no, "expected '<facet> <ridge> -> <facet> (<labels>)'");
    }
    const int d = *dim;
    const int facet = parse_int(words[0], line_no, "a facet index");
    const int ridge = parse_int(words[1], line_no, "a ridge index");
    const int other = parse_int(words[3], line_no, "a facet index");
    if (facet < 0 || facet >= t->facet_count() || other < 0 || other >= t->facet_count()) {
      throw ParseError(line_no, "facet index out of range");
    }
    if (ridge < 0 || ridge > d) throw ParseError(line_no, "ridge index out of range");
    const std::string_view tuple = words[4];
    if (tuple.size() < 2 || tuple.front() != '(' || tuple.back() != ')') {
      throw ParseError(line_no, "vertex labels must be written as (<labels>)");
    }
    const std::string_view labels = tuple.substr(1, tuple.size() - 2);
    if (static_cast<int>(labels.size()) != d) {
      throw ParseError(line_no, "expected " + std::to_string(d) + " vertex labels for dimension " +
                                    std::to_string(d) + ", got " + std::to_string(labels.size()));
    }
    std::vector<int> images;
    for (char c : labels) {
      const int v = label_value(c);
      if (v < 0 || v > d) throw ParseError(line_no, std::string("vertex label '") + c + "' out of range");
      images.push_back(v);
    }

    // Complete the bijection to check for a restated gluing before joining.
    std::vector<int> full(static_cast<std::size_t>(d + 1), -1);
    std::vector<bool> hit(static_cast<std::size_t>(d + 1), false);
    std::size_t k = 0;
    for (int v = 0; v <= d; ++v) {
      if (v == ridge) continue;
      if (hit[static_cast<std::size_t>(images[k])]) throw ParseError(line_no, "repeated vertex label");
      hit[static_cast<std::size_t>(images[k])] = true;
      full[static_cast<std::size_t>(v)] = images[k++];
    }
    for (int v = 0; v <= d; ++v) {
      if (!hit[static_cast<std::size_t>(v)]) full[static_cast<std::size_t>(ridge)] = v;
    }
    const Permutation perm(full);
    const int other_ridge = perm[ridge];
    if (facet == other && ridge == other_ridge) throw ParseError(line_no, "ridge glued to itself");

    const auto& existing = t->adjacent(facet, ridge);
    if (existing) {
      if (existing->facet == other && existing->correspondence == perm) continue;
      throw ParseError(line_no, "ridge " + std::to_string(ridge) + " of facet " + std::to_string(facet) +
                                    " is already glued");
    }
    if (t->is_glued(other, other_ridge)) {
      throw ParseError(line_no, "ridge " + std::to_string(other_ridge) + " of facet " +
                                    std::to_string(other) + " is already glued");
    }
    t->join(facet, ridge, other, perm);
  }
  if (!dim) throw ParseError(line_no, "missing 'dim <d>' header");
  if (!t) throw ParseError(line_no, "missing 'facets <n>' header");
  return std::move(*t);
}

}  // namespace facenum
