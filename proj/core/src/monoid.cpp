#include "zcohom/monoid.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace zcohom {

namespace {

void check_raw_shape(const RawTable& raw) {
  const std::size_t m = raw.names.size();
  if (m == 0) throw Error("empty table");
  if (raw.table.size() != m) throw Error("table must have one row per element");
  for (const auto& row : raw.table) {
    if (row.size() != m) throw Error("table must be square");
    for (ElementId e : row)
      if (e >= m) throw Error("table entry out of range");
  }
}

// first associativity violation in lexicographic (a, b, c) order, if any
std::optional<std::array<ElementId, 3>> associativity_violation(
    const std::vector<std::vector<ElementId>>& table) {
  const std::size_t m = table.size();
  for (ElementId a = 0; a < m; ++a)
    for (ElementId b = 0; b < m; ++b)
      for (ElementId c = 0; c < m; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) return {{a, b, c}};
  return std::nullopt;
}

std::optional<ElementId> find_identity(const RawTable& raw) {
  const std::size_t m = raw.names.size();
  for (ElementId e = 0; e < m; ++e) {
    bool ok = true;
    for (ElementId a = 0; a < m && ok; ++a)
      ok = raw.table[e][a] == a && raw.table[a][e] == a;
    if (ok) return e;
  }
  return std::nullopt;
}

std::string fresh_name(const std::vector<std::string>& taken, std::string candidate) {
  while (std::find(taken.begin(), taken.end(), candidate) != taken.end()) candidate += "'";
  return candidate;
}

}  // namespace

ElementId MonoidWithZero::product(const std::vector<ElementId>& xs) const {
  ElementId p = identity;
  for (ElementId x : xs) p = mul(p, x);
  return p;
}

std::vector<ElementId> MonoidWithZero::nonzero_elements() const {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < size(); ++a)
    if (a != zero) out.push_back(a);
  return out;
}

MonoidWithZero validate(std::vector<std::string> names, ElementId identity, ElementId zero,
                        std::vector<std::vector<ElementId>> table) {
  const std::size_t m = names.size();
  RawTable raw{names, table};
  check_raw_shape(raw);
  if (identity >= m || zero >= m) throw Error("identity or zero id out of range");
  if (identity == zero) throw IdentityEqualsZero();
  if (m < 2) throw Error("monoid with zero needs at least two elements");
  {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != m) throw Error("duplicate element name");
  }
  for (ElementId a = 0; a < m; ++a)
    if (table[identity][a] != a || table[a][identity] != a)
      throw BadIdentity(a, "element \"" + names[a] + "\" is not fixed by \"" + names[identity] + "\"");
  for (ElementId a = 0; a < m; ++a)
    if (table[zero][a] != zero || table[a][zero] != zero)
      throw BadZero(a, "product with \"" + names[a] + "\" does not absorb to \"" + names[zero] + "\"");
  if (auto w = associativity_violation(table))
    throw NotAssociative((*w)[0], (*w)[1], (*w)[2],
                         "(" + names[(*w)[0]] + "·" + names[(*w)[1]] + ")·" + names[(*w)[2]] +
                             " != " + names[(*w)[0]] + "·(" + names[(*w)[1]] + "·" + names[(*w)[2]] + ")");
  return MonoidWithZero{std::move(names), identity, zero, std::move(table)};
}

MonoidWithZero adjoin_zero(const RawTable& monoid_table) {
  check_raw_shape(monoid_table);
  if (auto w = associativity_violation(monoid_table.table))
    throw NotAssociative((*w)[0], (*w)[1], (*w)[2], "input table is not associative");
  auto identity = find_identity(monoid_table);
  if (!identity) throw Error("adjoin_zero: input table has no identity element");

  const std::size_t m = monoid_table.names.size();
  std::vector<std::string> names = monoid_table.names;
  names.push_back(fresh_name(names, "0"));
  std::vector<std::vector<ElementId>> table(m + 1, std::vector<ElementId>(m + 1, m));
  for (ElementId a = 0; a < m; ++a)
    for (ElementId b = 0; b < m; ++b) table[a][b] = monoid_table.table[a][b];
  return validate(std::move(names), *identity, m, std::move(table));
}

RawTable adjoin_identity(const RawTable& semigroup_table) {
  check_raw_shape(semigroup_table);
  if (auto w = associativity_violation(semigroup_table.table))
    throw NotAssociative((*w)[0], (*w)[1], (*w)[2], "input table is not associative");

  const std::size_t m = semigroup_table.names.size();
  RawTable out;
  out.names.push_back(fresh_name(semigroup_table.names, "1"));
  out.names.insert(out.names.end(), semigroup_table.names.begin(), semigroup_table.names.end());
  out.table.assign(m + 1, std::vector<ElementId>(m + 1));
  for (ElementId j = 0; j <= m; ++j) out.table[0][j] = j;
  for (ElementId i = 0; i < m; ++i) {
    out.table[i + 1][0] = i + 1;
    for (ElementId j = 0; j < m; ++j) out.table[i + 1][j + 1] = semigroup_table.table[i][j] + 1;
  }
  return out;
}

MonoidWithZero zero_free(const WordTruncationSpec& spec) {
  for (const std::string& letter : spec.alphabet) {
    if (letter.size() != 1) throw Error("zero_free: letters must be single characters");
    if (letter == "0" || letter == "1") throw Error("zero_free: letters \"0\" and \"1\" are reserved");
  }
  {
    std::set<std::string> seen(spec.alphabet.begin(), spec.alphabet.end());
    if (seen.size() != spec.alphabet.size()) throw Error("zero_free: duplicate letter");
  }
  if (!spec.allowed_words.count("")) throw Error("zero_free: the empty word must be allowed");
  for (const std::string& w : spec.allowed_words) {
    for (char ch : w)
      if (std::find(spec.alphabet.begin(), spec.alphabet.end(), std::string(1, ch)) ==
          spec.alphabet.end())
        throw Error("zero_free: word \"" + w + "\" uses a letter outside the alphabet");
    if (w.empty()) continue;
    // factor-closure follows from closure under dropping one end letter
    std::string tail = w.substr(1);
    if (!spec.allowed_words.count(tail)) throw NotFactorClosed(w, tail);
    std::string head = w.substr(0, w.size() - 1);
    if (!spec.allowed_words.count(head)) throw NotFactorClosed(w, head);
  }

  std::vector<std::string> words(spec.allowed_words.begin(), spec.allowed_words.end());
  std::sort(words.begin(), words.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  const std::size_t k = words.size();
  std::map<std::string, ElementId> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    index[words[i]] = i;
    names.push_back(words[i].empty() ? "1" : words[i]);
  }
  names.push_back("0");
  const ElementId zero = k;

  std::vector<std::vector<ElementId>> table(k + 1, std::vector<ElementId>(k + 1, zero));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto it = index.find(words[i] + words[j]);
      table[i][j] = it == index.end() ? zero : it->second;
    }
  return validate(std::move(names), index.at(""), zero, std::move(table));
}

MonoidWithZero free_truncation(const std::vector<std::string>& alphabet,
                               std::optional<std::size_t> max_len) {
  if (!max_len)
    throw InfiniteInput(
        "a free monoid with adjoined zero is infinite; give a truncation length bound");
  WordTruncationSpec spec;
  spec.alphabet = alphabet;
  std::vector<std::string> frontier{""};
  spec.allowed_words.insert("");
  for (std::size_t len = 1; len <= *max_len; ++len) {
    std::vector<std::string> next;
    for (const std::string& w : frontier)
      for (const std::string& letter : alphabet) {
        next.push_back(w + letter);
        spec.allowed_words.insert(w + letter);
      }
    frontier = std::move(next);
  }
  return zero_free(spec);
}

ZeroCancellativityResult is_zero_cancellative(const MonoidWithZero& m) {
  const std::size_t n = m.size();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b)
      for (ElementId x = 0; x < n; ++x) {
        if (m.mul(a, x) == m.mul(b, x) && m.mul(a, x) != m.zero)
          return {false, CancellationWitness{a, b, x, true}};
        if (m.mul(x, a) == m.mul(x, b) && m.mul(x, a) != m.zero)
          return {false, CancellationWitness{a, b, x, false}};
      }
  return {true, std::nullopt};
}

MonoidWithZero example_uvw() {
  // u·u = u·v = v·u = v·v = w, products with w or 0 vanish
  RawTable semigroup;
  semigroup.names = {"u", "v", "w", "0"};
  semigroup.table = {{2, 2, 3, 3}, {2, 2, 3, 3}, {3, 3, 3, 3}, {3, 3, 3, 3}};
  RawTable with_one = adjoin_identity(semigroup);
  return validate(with_one.names, 0, 4, with_one.table);
}

std::vector<std::string> builtin_monoid_names() {
  return {"trivial", "z2-with-zero", "example-uvw", "m3", "free2-len1"};
}

MonoidWithZero builtin_monoid(const std::string& name) {
  if (name == "trivial") return validate({"1", "0"}, 0, 1, {{0, 1}, {1, 1}});
  if (name == "z2-with-zero") {
    RawTable z2{{"1", "g"}, {{0, 1}, {1, 0}}};
    return adjoin_zero(z2);
  }
  if (name == "example-uvw") return example_uvw();
  if (name == "m3") return free_truncation({"x"}, 2);
  if (name == "free2-len1") return free_truncation({"x", "y"}, 1);
  throw Error("unknown builtin monoid \"" + name + "\"");
}

}  // namespace zcohom
