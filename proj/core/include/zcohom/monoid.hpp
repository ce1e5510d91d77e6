#pragma once

#include "zcohom/errors.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace zcohom {

/// Finite monoid with a designated identity and a designated absorbing zero.
/// Instances are produced by validate() and the constructors below, so a
/// value you hold has already passed the full law check.
struct MonoidWithZero {
  std::vector<std::string> names;
  ElementId identity = 0;
  ElementId zero = 0;
  std::vector<std::vector<ElementId>> table;

  std::size_t size() const { return names.size(); }
  ElementId mul(ElementId a, ElementId b) const { return table[a][b]; }
  ElementId product(const std::vector<ElementId>& xs) const;
  bool is_zero(ElementId a) const { return a == zero; }
  std::vector<ElementId> nonzero_elements() const;  // ascending ids
  const std::string& name_of(ElementId a) const { return names[a]; }
};

/// Bare multiplication table, before any identity/zero bookkeeping.
struct RawTable {
  std::vector<std::string> names;
  std::vector<std::vector<ElementId>> table;
};

/// Checks every MonoidWithZero invariant and returns the monoid, or throws
/// NotAssociative / BadIdentity / BadZero / IdentityEqualsZero with a witness.
MonoidWithZero validate(std::vector<std::string> names, ElementId identity, ElementId zero,
                        std::vector<std::vector<ElementId>> table);

/// Appends a fresh absorbing element to an associative table with identity.
MonoidWithZero adjoin_zero(const RawTable& monoid_table);

/// Prepends a fresh two-sided identity; old products are unchanged. Applies
/// even when the table already is a monoid (the old identity stops being one).
RawTable adjoin_identity(const RawTable& semigroup_table);

/// Finite factor-closed set of words over an alphabet; the data of a Rees
/// truncation of a free monoid.
struct WordTruncationSpec {
  std::vector<std::string> alphabet;    // single-character letters
  std::set<std::string> allowed_words;  // must contain "" and every factor
};

/// Rees factor monoid: allowed words with concatenation, everything else 0.
MonoidWithZero zero_free(const WordTruncationSpec& spec);

/// Truncation of the free monoid over `alphabet` at word length `max_len`.
/// Without a bound the requested monoid is infinite -> InfiniteInput.
MonoidWithZero free_truncation(const std::vector<std::string>& alphabet,
                               std::optional<std::size_t> max_len);

struct CancellationWitness {
  ElementId a, b, x;
  bool right;  // true: a·x = b·x ≠ 0 with a ≠ b; false: x·a = x·b ≠ 0
};

struct ZeroCancellativityResult {
  bool cancellative = false;
  std::optional<CancellationWitness> witness;
};

ZeroCancellativityResult is_zero_cancellative(const MonoidWithZero& m);

/// The five-element commutative monoid built from the semigroup
/// {u, v, w, 0} with u^2 = v^2 = uv = w and uw = vw = 0 by adjoining 1.
MonoidWithZero example_uvw();

std::vector<std::string> builtin_monoid_names();
MonoidWithZero builtin_monoid(const std::string& name);

}  // namespace zcohom
