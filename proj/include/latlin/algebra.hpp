#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

#include "latlin/errors.hpp"
#include "latlin/rational.hpp"

namespace latlin {

// The supported algebra instances. Each is a semiring whose carrier is a
// complete lattice, whose addition is the lattice join, and whose
// multiplication distributes over arbitrary joins. All but PowerSet are
// totally ordered.
enum class AlgebraKind {
  MaxPlus,      // extended rationals, join = max, otimes = +
  MaxMin,       // extended rationals, join = max, otimes = min
  Boolean,      // {false,true}, join = or, otimes = and
  FiniteChain,  // chain {0,...,N}, join = max, otimes = min
  PowerSet,     // subsets of a finite ground set, join = union, otimes = intersection
};

enum class Ordering { Less, Equal, Greater };

class Element;

struct Algebra {
  AlgebraKind kind = AlgebraKind::MaxPlus;
  // FiniteChain: largest chain index N (carrier {0..N}).
  // PowerSet: ground-set size. Unused otherwise.
  int param = 0;

  friend bool operator==(const Algebra&, const Algebra&) = default;

  static Algebra max_plus() { return {AlgebraKind::MaxPlus, 0}; }
  static Algebra max_min() { return {AlgebraKind::MaxMin, 0}; }
  static Algebra boolean() { return {AlgebraKind::Boolean, 1}; }
  static Algebra finite_chain(int top_index);
  static Algebra power_set(int ground_size);

  // Names used by the CLI and config files: "max-plus", "max-min", "bool",
  // "chain-min:N", "powerset:k".
  static Algebra from_name(const std::string& name);
  std::string name() const;

  bool totally_ordered() const { return kind != AlgebraKind::PowerSet; }
  bool dense() const { return kind == AlgebraKind::MaxPlus || kind == AlgebraKind::MaxMin; }
  bool chain_like() const { return kind == AlgebraKind::Boolean || kind == AlgebraKind::FiniteChain; }
  bool finite_carrier() const { return !dense(); }

  std::size_t carrier_size() const;
  Element carrier_at(std::size_t index) const;

  Element bottom() const;
  Element top() const;
  Element one() const;  // multiplicative identity
};

// A single carrier value, tagged with its algebra. For the dense kinds the
// payload is an extended rational (bottom / finite / top); for the chain
// kinds an integer index; for PowerSet a bitmask over the ground set.
class Element {
 public:
  enum class Ext : std::uint8_t { Bottom, Finite, Top };

  Element() = default;

  static Element bottom(const Algebra& alg);
  static Element top(const Algebra& alg);

  static Element finite(const Algebra& alg, Rational value) {
    if (!alg.dense()) throw Error(ErrorCode::InvalidArgument, "finite rational payload needs a dense carrier");
    Element e;
    e.alg_ = alg;
    e.ext_ = Ext::Finite;
    e.value_ = std::move(value);
    return e;
  }

  static Element chain(const Algebra& alg, int index) {
    if (!alg.chain_like()) throw Error(ErrorCode::InvalidArgument, "chain index payload needs a chain carrier");
    if (index < 0 || index > alg.param) {
      throw Error(ErrorCode::InvalidArgument, "chain index " + std::to_string(index) + " outside 0.." + std::to_string(alg.param));
    }
    Element e;
    e.alg_ = alg;
    e.raw_ = static_cast<std::uint32_t>(index);
    return e;
  }

  static Element subset(const Algebra& alg, std::uint32_t bits) {
    if (alg.kind != AlgebraKind::PowerSet) throw Error(ErrorCode::InvalidArgument, "subset payload needs a power-set carrier");
    std::uint32_t full = (alg.param >= 32) ? ~0u : ((1u << alg.param) - 1u);
    if ((bits & ~full) != 0) throw Error(ErrorCode::InvalidArgument, "subset bits outside the ground set");
    Element e;
    e.alg_ = alg;
    e.raw_ = bits;
    return e;
  }

  const Algebra& algebra() const { return alg_; }
  Ext ext() const { return ext_; }
  const Rational& finite_value() const { return value_; }
  int chain_index() const { return static_cast<int>(raw_); }
  std::uint32_t subset_bits() const { return raw_; }

 private:
  Algebra alg_{};
  Ext ext_ = Ext::Bottom;
  Rational value_{};
  std::uint32_t raw_ = 0;
};

inline Element Element::bottom(const Algebra& alg) {
  Element e;
  e.alg_ = alg;
  if (alg.dense()) e.ext_ = Ext::Bottom;
  // chain bottom is index 0, power-set bottom is the empty set: raw_ = 0
  return e;
}

inline Element Element::top(const Algebra& alg) {
  Element e;
  e.alg_ = alg;
  if (alg.dense()) {
    e.ext_ = Ext::Top;
  } else if (alg.chain_like()) {
    e.raw_ = static_cast<std::uint32_t>(alg.param);
  } else {
    e.raw_ = (alg.param >= 32) ? ~0u : ((1u << alg.param) - 1u);
  }
  return e;
}

inline Algebra Algebra::finite_chain(int top_index) {
  if (top_index < 1) throw Error(ErrorCode::InvalidArgument, "chain-min needs a top index >= 1");
  return {AlgebraKind::FiniteChain, top_index};
}

inline Algebra Algebra::power_set(int ground_size) {
  if (ground_size < 1 || ground_size > 20) {
    throw Error(ErrorCode::InvalidArgument, "powerset ground-set size must be in 1..20");
  }
  return {AlgebraKind::PowerSet, ground_size};
}

inline std::string Algebra::name() const {
  switch (kind) {
    case AlgebraKind::MaxPlus: return "max-plus";
    case AlgebraKind::MaxMin: return "max-min";
    case AlgebraKind::Boolean: return "bool";
    case AlgebraKind::FiniteChain: return "chain-min:" + std::to_string(param);
    case AlgebraKind::PowerSet: return "powerset:" + std::to_string(param);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown algebra kind");
}

inline Algebra Algebra::from_name(const std::string& name) {
  if (name == "max-plus") return max_plus();
  if (name == "max-min") return max_min();
  if (name == "bool") return boolean();
  auto parse_param = [&](std::size_t prefix_len) {
    int value = 0;
    const char* first = name.data() + prefix_len;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw Error(ErrorCode::ParseError, "bad algebra parameter in '" + name + "'");
    }
    return value;
  };
  if (name.rfind("chain-min:", 0) == 0) {
    int n = parse_param(10);
    if (n < 1) throw Error(ErrorCode::ParseError, "chain-min parameter must be >= 1");
    return finite_chain(n);
  }
  if (name.rfind("powerset:", 0) == 0) {
    int k = parse_param(9);
    if (k < 1 || k > 20) throw Error(ErrorCode::ParseError, "powerset parameter must be in 1..20");
    return power_set(k);
  }
  throw Error(ErrorCode::ParseError, "unknown algebra '" + name + "'");
}

inline std::size_t Algebra::carrier_size() const {
  switch (kind) {
    case AlgebraKind::Boolean:
    case AlgebraKind::FiniteChain:
      return static_cast<std::size_t>(param) + 1;
    case AlgebraKind::PowerSet:
      return std::size_t{1} << param;
    default:
      throw Error(ErrorCode::CarrierNotFinite, "carrier of " + name() + " is not finite");
  }
}

inline Element Algebra::carrier_at(std::size_t index) const {
  if (index >= carrier_size()) throw Error(ErrorCode::InvalidArgument, "carrier index out of range");
  if (chain_like()) return Element::chain(*this, static_cast<int>(index));
  return Element::subset(*this, static_cast<std::uint32_t>(index));
}

inline Element Algebra::bottom() const { return Element::bottom(*this); }
inline Element Algebra::top() const { return Element::top(*this); }

inline Element Algebra::one() const {
  switch (kind) {
    case AlgebraKind::MaxPlus: return Element::finite(*this, Rational(0));
    case AlgebraKind::MaxMin:
    case AlgebraKind::Boolean:
    case AlgebraKind::FiniteChain:
    case AlgebraKind::PowerSet:
      // otimes is a meet-style operation, so the top element is neutral.
      return top();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown algebra kind");
}

inline void require_same_algebra(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra())) {
    throw Error(ErrorCode::AlgebraMismatch,
                "operands from " + a.algebra().name() + " and " + b.algebra().name());
  }
}

// Total-order comparison. PowerSet rejects this; use leq for the partial order.
inline Ordering compare(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  const Algebra& alg = a.algebra();
  if (!alg.totally_ordered()) {
    throw Error(ErrorCode::NotTotallyOrdered, alg.name() + " has no total order; use leq");
  }
  if (alg.dense()) {
    auto rank = [](Element::Ext e) { return e == Element::Ext::Bottom ? 0 : e == Element::Ext::Finite ? 1 : 2; };
    int ra = rank(a.ext());
    int rb = rank(b.ext());
    if (ra != rb) return ra < rb ? Ordering::Less : Ordering::Greater;
    if (a.ext() != Element::Ext::Finite) return Ordering::Equal;
    if (a.finite_value() < b.finite_value()) return Ordering::Less;
    if (b.finite_value() < a.finite_value()) return Ordering::Greater;
    return Ordering::Equal;
  }
  int ia = a.chain_index();
  int ib = b.chain_index();
  return ia < ib ? Ordering::Less : ia > ib ? Ordering::Greater : Ordering::Equal;
}

// Lattice order. Subset inclusion for PowerSet, the total order otherwise.
inline bool leq(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  if (a.algebra().kind == AlgebraKind::PowerSet) {
    return (a.subset_bits() & ~b.subset_bits()) == 0;
  }
  return compare(a, b) != Ordering::Greater;
}

inline bool equal(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  if (a.algebra().kind == AlgebraKind::PowerSet) return a.subset_bits() == b.subset_bits();
  return compare(a, b) == Ordering::Equal;
}

inline bool less(const Element& a, const Element& b) {
  return compare(a, b) == Ordering::Less;
}

inline Element join(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  if (a.algebra().kind == AlgebraKind::PowerSet) {
    return Element::subset(a.algebra(), a.subset_bits() | b.subset_bits());
  }
  return compare(a, b) == Ordering::Less ? b : a;
}

inline Element meet(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  if (a.algebra().kind == AlgebraKind::PowerSet) {
    return Element::subset(a.algebra(), a.subset_bits() & b.subset_bits());
  }
  return compare(a, b) == Ordering::Greater ? b : a;
}

// Semiring multiplication. Bottom annihilates in every instance; in MaxPlus
// this takes precedence over the top absorbing rule (bottom ⊗ top = bottom).
inline Element otimes(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  const Algebra& alg = a.algebra();
  switch (alg.kind) {
    case AlgebraKind::MaxPlus: {
      if (a.ext() == Element::Ext::Bottom || b.ext() == Element::Ext::Bottom) return alg.bottom();
      if (a.ext() == Element::Ext::Top || b.ext() == Element::Ext::Top) return alg.top();
      return Element::finite(alg, a.finite_value() + b.finite_value());
    }
    case AlgebraKind::MaxMin:
    case AlgebraKind::Boolean:
    case AlgebraKind::FiniteChain:
    case AlgebraKind::PowerSet:
      return meet(a, b);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown algebra kind");
}

// The solution set of a 1x1 system a ⊗ v = w over a totally ordered carrier.
// Over these algebras it is always empty, a closed interval, or an interval
// open only on the left; no other shapes occur.
class ScalarSolution {
 public:
  enum class Shape { Empty, Closed, LeftOpen };

  static ScalarSolution empty(const Algebra& alg) {
    ScalarSolution s;
    s.shape_ = Shape::Empty;
    s.lower_ = alg.bottom();
    s.upper_ = alg.bottom();
    return s;
  }

  static ScalarSolution closed(const Element& p, const Element& q) {
    if (compare(p, q) == Ordering::Greater) {
      throw Error(ErrorCode::InvalidArgument, "closed interval needs p <= q");
    }
    ScalarSolution s;
    s.shape_ = Shape::Closed;
    s.lower_ = p;
    s.upper_ = q;
    return s;
  }

  static ScalarSolution left_open(const Element& p, const Element& q) {
    if (compare(p, q) != Ordering::Less) {
      throw Error(ErrorCode::InvalidArgument, "left-open interval needs p < q");
    }
    ScalarSolution s;
    s.shape_ = Shape::LeftOpen;
    s.lower_ = p;
    s.upper_ = q;
    return s;
  }

  Shape shape() const { return shape_; }
  bool is_empty() const { return shape_ == Shape::Empty; }
  bool is_left_open() const { return shape_ == Shape::LeftOpen; }
  const Element& lower() const { return lower_; }
  const Element& upper() const { return upper_; }

  bool contains(const Element& v) const {
    if (shape_ == Shape::Empty) return false;
    Ordering lo = compare(lower_, v);
    if (lo == Ordering::Greater) return false;
    if (lo == Ordering::Equal && shape_ == Shape::LeftOpen) return false;
    return compare(v, upper_) != Ordering::Greater;
  }

 private:
  Shape shape_ = Shape::Empty;
  Element lower_;
  Element upper_;
};

// Exact solution set of a ⊗ v = w.
inline ScalarSolution solve_scalar(const Element& a, const Element& w) {
  require_same_algebra(a, w);
  const Algebra& alg = a.algebra();
  if (!alg.totally_ordered()) {
    throw Error(ErrorCode::NotTotallyOrdered, "scalar solving needs a totally ordered carrier");
  }
  if (alg.kind == AlgebraKind::MaxPlus) {
    switch (a.ext()) {
      case Element::Ext::Bottom:
        // a ⊗ v = bottom for every v
        return w.ext() == Element::Ext::Bottom ? ScalarSolution::closed(alg.bottom(), alg.top())
                                               : ScalarSolution::empty(alg);
      case Element::Ext::Top:
        // top ⊗ v = bottom when v = bottom, top otherwise
        if (w.ext() == Element::Ext::Bottom) return ScalarSolution::closed(alg.bottom(), alg.bottom());
        if (w.ext() == Element::Ext::Top) return ScalarSolution::left_open(alg.bottom(), alg.top());
        return ScalarSolution::empty(alg);
      case Element::Ext::Finite: {
        if (w.ext() == Element::Ext::Bottom) return ScalarSolution::closed(alg.bottom(), alg.bottom());
        if (w.ext() == Element::Ext::Top) return ScalarSolution::closed(alg.top(), alg.top());
        Element v = Element::finite(alg, w.finite_value() - a.finite_value());
        return ScalarSolution::closed(v, v);
      }
    }
    throw Error(ErrorCode::InvalidArgument, "bad element");
  }
  // min-multiplication kinds: min(a, v) = w
  switch (compare(w, a)) {
    case Ordering::Greater:
      return ScalarSolution::empty(alg);  // min(a, v) <= a < w
    case Ordering::Equal:
      return ScalarSolution::closed(w, alg.top());  // every v >= a
    case Ordering::Less:
      return ScalarSolution::closed(w, w);  // forced v = w
  }
  throw Error(ErrorCode::InvalidArgument, "bad ordering");
}

// Largest v with a ⊗ v <= w. Defined for every pair: bottom always qualifies
// and multiplication by a fixed element is monotone.
inline Element residual(const Element& a, const Element& w) {
  require_same_algebra(a, w);
  const Algebra& alg = a.algebra();
  if (!alg.totally_ordered()) {
    throw Error(ErrorCode::NotTotallyOrdered, "residuation needs a totally ordered carrier");
  }
  if (alg.kind == AlgebraKind::MaxPlus) {
    switch (a.ext()) {
      case Element::Ext::Bottom:
        return alg.top();
      case Element::Ext::Top:
        return w.ext() == Element::Ext::Top ? alg.top() : alg.bottom();
      case Element::Ext::Finite:
        if (w.ext() == Element::Ext::Top) return alg.top();
        if (w.ext() == Element::Ext::Bottom) return alg.bottom();
        return Element::finite(alg, w.finite_value() - a.finite_value());
    }
    throw Error(ErrorCode::InvalidArgument, "bad element");
  }
  // min(a, v) <= w holds for all v when a <= w, otherwise exactly for v <= w.
  return leq(a, w) ? alg.top() : w;
}

// True when some carrier element lies strictly between a and b (pre: a < b).
// The dense carriers are order-dense; the chains are decided by index gap.
inline bool has_strict_between(const Element& a, const Element& b) {
  const Algebra& alg = a.algebra();
  if (alg.dense()) return true;
  return b.chain_index() - a.chain_index() >= 2;
}

// Some carrier element strictly between a and b (pre: one exists).
inline Element element_between(const Element& a, const Element& b) {
  const Algebra& alg = a.algebra();
  if (alg.chain_like()) return Element::chain(alg, a.chain_index() + 1);
  if (a.ext() == Element::Ext::Finite && b.ext() == Element::Ext::Finite) {
    return Element::finite(alg, (a.finite_value() + b.finite_value()) / 2);
  }
  if (a.ext() == Element::Ext::Bottom) {
    return b.ext() == Element::Ext::Top ? Element::finite(alg, Rational(0))
                                        : Element::finite(alg, b.finite_value() - 1);
  }
  return Element::finite(alg, a.finite_value() + 1);  // a finite, b top
}

inline Element chain_successor(const Element& a) {
  return Element::chain(a.algebra(), a.chain_index() + 1);
}

inline Element chain_predecessor(const Element& a) {
  return Element::chain(a.algebra(), a.chain_index() - 1);
}

// --- element literals -------------------------------------------------------
//
// Dense kinds: "-inf", "inf", "p/q", integers, decimals. Chains: the index.
// Booleans additionally accept true/false. PowerSet: a string of ground-set
// letters starting at 'a' ("" is the empty set, "ac" = {a,c}).

inline Element parse_element(const Algebra& alg, const std::string& text) {
  switch (alg.kind) {
    case AlgebraKind::MaxPlus:
    case AlgebraKind::MaxMin:
      if (text == "-inf") return alg.bottom();
      if (text == "inf") return alg.top();
      return Element::finite(alg, parse_rational(text));
    case AlgebraKind::Boolean:
      if (text == "true") return Element::chain(alg, 1);
      if (text == "false") return Element::chain(alg, 0);
      [[fallthrough]];
    case AlgebraKind::FiniteChain: {
      int idx = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), idx);
      if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw Error(ErrorCode::ParseError, "bad chain literal '" + text + "'");
      }
      if (idx < 0 || idx > alg.param) {
        throw Error(ErrorCode::ParseError, "chain literal '" + text + "' outside 0.." + std::to_string(alg.param));
      }
      return Element::chain(alg, idx);
    }
    case AlgebraKind::PowerSet: {
      std::uint32_t bits = 0;
      for (char c : text) {
        int pos = c - 'a';
        if (pos < 0 || pos >= alg.param) {
          throw Error(ErrorCode::ParseError, "subset literal '" + text + "' uses letters outside the ground set");
        }
        bits |= (1u << pos);
      }
      return Element::subset(alg, bits);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown algebra kind");
}

inline std::string format_element(const Element& e) {
  const Algebra& alg = e.algebra();
  switch (alg.kind) {
    case AlgebraKind::MaxPlus:
    case AlgebraKind::MaxMin:
      if (e.ext() == Element::Ext::Bottom) return "-inf";
      if (e.ext() == Element::Ext::Top) return "inf";
      return format_rational(e.finite_value());
    case AlgebraKind::Boolean:
    case AlgebraKind::FiniteChain:
      return std::to_string(e.chain_index());
    case AlgebraKind::PowerSet: {
      std::string out;
      for (int pos = 0; pos < alg.param; ++pos) {
        if (e.subset_bits() & (1u << pos)) out.push_back(static_cast<char>('a' + pos));
      }
      return out;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown algebra kind");
}

}  // namespace latlin
