#ifndef DUALBIMOD_LABEL_HPP
#define DUALBIMOD_LABEL_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>

#include "dualbimod/rational.hpp"

namespace dualbimod {

/*
  Symbolic names for the classified indecomposables.
  Strings come in four shapes; the integer counts valleys. Band(k, λ) needs
  λ ≠ 0. ProjInj is the four-dimensional projective-injective bimodule and
  Regular the two-dimensional identity bimodule (the length-1 band at
  eigenvalue 1, kept as its own label).
*/
enum class StringShape { W, S, N, M };

struct StringLabel {
  StringShape shape;
  int valleys;  // k >= 0
};

struct BandLabel {
  int length;      // k >= 1
  Rat eigenvalue;  // nonzero
};

struct ProjInjLabel {};
struct RegularLabel {};

using Label = std::variant<StringLabel, BandLabel, ProjInjLabel, RegularLabel>;

inline char shape_char(StringShape s) {
  switch (s) {
    case StringShape::W: return 'W';
    case StringShape::S: return 'S';
    case StringShape::N: return 'N';
    case StringShape::M: return 'M';
  }
  return '?';
}

inline Label string_label(StringShape s, int k) { return StringLabel{s, k}; }
inline Label band_label(int k, const Rat& lam) { return BandLabel{k, lam}; }
inline Label projinj_label() { return ProjInjLabel{}; }
inline Label regular_label() { return RegularLabel{}; }

inline int label_dim(const Label& l) {
  if (const auto* s = std::get_if<StringLabel>(&l)) {
    switch (s->shape) {
      case StringShape::M: return 2 * s->valleys + 3;
      case StringShape::N:
      case StringShape::S: return 2 * s->valleys + 2;
      case StringShape::W: return 2 * s->valleys + 1;
    }
  }
  if (const auto* b = std::get_if<BandLabel>(&l)) return 2 * b->length;
  if (std::holds_alternative<ProjInjLabel>(l)) return 4;
  return 2;  // Regular
}

inline std::string label_str(const Label& l) {
  if (const auto* s = std::get_if<StringLabel>(&l))
    return std::string(1, shape_char(s->shape)) + ":" + std::to_string(s->valleys);
  if (const auto* b = std::get_if<BandLabel>(&l))
    return "B:" + std::to_string(b->length) + ":" + b->eigenvalue.str();
  if (std::holds_alternative<ProjInjLabel>(l)) return "DxD";
  return "D";
}

// Tie-break order used when candidates share a dimension:
// M before N before S before W before Band before ProjInj before Regular.
inline int shape_rank(const Label& l) {
  if (const auto* s = std::get_if<StringLabel>(&l)) {
    switch (s->shape) {
      case StringShape::M: return 0;
      case StringShape::N: return 1;
      case StringShape::S: return 2;
      case StringShape::W: return 3;
    }
  }
  if (std::holds_alternative<BandLabel>(l)) return 4;
  if (std::holds_alternative<ProjInjLabel>(l)) return 5;
  return 6;
}

inline bool operator==(const Label& a, const Label& b) {
  if (a.index() != b.index()) return false;
  if (const auto* s = std::get_if<StringLabel>(&a)) {
    const auto* t = std::get_if<StringLabel>(&b);
    return s->shape == t->shape && s->valleys == t->valleys;
  }
  if (const auto* s = std::get_if<BandLabel>(&a)) {
    const auto* t = std::get_if<BandLabel>(&b);
    return s->length == t->length && s->eigenvalue == t->eigenvalue;
  }
  return true;
}

inline bool operator!=(const Label& a, const Label& b) { return !(a == b); }

// Total order so labels can key maps/multisets.
inline bool label_less(const Label& a, const Label& b) {
  const int ra = shape_rank(a), rb = shape_rank(b);
  if (ra != rb) return ra < rb;
  if (const auto* s = std::get_if<StringLabel>(&a))
    return s->valleys < std::get_if<StringLabel>(&b)->valleys;
  if (const auto* s = std::get_if<BandLabel>(&a)) {
    const auto* t = std::get_if<BandLabel>(&b);
    if (s->length != t->length) return s->length < t->length;
    return s->eigenvalue < t->eigenvalue;
  }
  return false;
}

struct LabelLess {
  bool operator()(const Label& a, const Label& b) const { return label_less(a, b); }
};

using LabelMultiset = std::map<Label, int, LabelLess>;

std::string multiset_str(const LabelMultiset& m);

// Grammar: D | DxD | W:k | S:k | N:k | M:k | B:k:p/q  (B:k:p means p/1).
std::optional<Label> parse_label(std::string_view s);

}  // namespace dualbimod

#endif
