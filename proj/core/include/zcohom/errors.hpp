#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zcohom {

/// Dense index into a multiplication table. Element names are I/O only.
using ElementId = std::size_t;

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- multiplication table validation ----

class NotAssociative : public Error {
 public:
  NotAssociative(ElementId a, ElementId b, ElementId c, const std::string& detail)
      : Error("not associative: " + detail), a(a), b(b), c(c) {}
  ElementId a, b, c;
};

class BadIdentity : public Error {
 public:
  BadIdentity(ElementId witness, const std::string& detail)
      : Error("identity law fails: " + detail), witness(witness) {}
  ElementId witness;
};

class BadZero : public Error {
 public:
  BadZero(ElementId witness, const std::string& detail)
      : Error("zero law fails: " + detail), witness(witness) {}
  ElementId witness;
};

class IdentityEqualsZero : public Error {
 public:
  IdentityEqualsZero() : Error("identity and zero coincide") {}
};

class InfiniteInput : public Error {
 public:
  using Error::Error;
};

class NotFactorClosed : public Error {
 public:
  NotFactorClosed(std::string word, std::string factor)
      : Error("word set not factor-closed: \"" + word + "\" is allowed but its factor \"" +
              factor + "\" is not"),
        word(std::move(word)),
        factor(std::move(factor)) {}
  std::string word, factor;
};

// ---- category of factorizations ----

class ZeroObject : public Error {
 public:
  explicit ZeroObject(ElementId object)
      : Error("zero is not an object of the factorization category"), object(object) {}
  ElementId object;
};

class NotComposable : public Error {
 public:
  using Error::Error;
};

// ---- natural systems ----

class MissingMap : public Error {
 public:
  MissingMap(ElementId first, ElementId second, const std::string& detail)
      : Error("missing structure map: " + detail), first(first), second(second) {}
  ElementId first, second;
};

class BadAction : public Error {
 public:
  BadAction(ElementId s, ElementId t, const std::string& detail)
      : Error("0-module action law fails: " + detail), s(s), t(t) {}
  ElementId s, t;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

// ---- homological algebra ----

class CompositionNotZero : public Error {
 public:
  using Error::Error;
};

class NotEpi : public Error {
 public:
  explicit NotEpi(ElementId object, const std::string& detail)
      : Error("component is not surjective: " + detail), object(object) {}
  ElementId object;
};

class NoPreimage : public Error {
 public:
  explicit NoPreimage(ElementId object)
      : Error("no preimage found although the component passed the epi check"), object(object) {}
  ElementId object;
};

// ---- file formats ----

class ParseError : public Error {
 public:
  ParseError(const std::string& locus, const std::string& message)
      : Error(locus + ": " + message), locus(locus) {}
  std::string locus;
};

}  // namespace zcohom
