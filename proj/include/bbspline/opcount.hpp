#pragma once

// Floating-point operation accounting.
//
// Counted<T> is a drop-in scalar that tallies every +, -, *, / it performs
// into a thread-local OpCounter.  The algorithms in this library are templates
// over their scalar type, so instantiating them with Counted<double> is the
// "instrumented build"; the plain double/float instantiations carry no
// counting code at all.

#include <compare>
#include <cstdint>
#include <ostream>
#include <type_traits>

namespace bbspline {

struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t subs = 0;
  std::uint64_t muls = 0;
  std::uint64_t divs = 0;
  std::uint64_t pows = 0;

  std::uint64_t total() const { return adds + subs + muls + divs + pows; }

  OpCounter& operator+=(const OpCounter& o) {
    adds += o.adds;
    subs += o.subs;
    muls += o.muls;
    divs += o.divs;
    pows += o.pows;
    return *this;
  }
  friend OpCounter operator+(OpCounter a, const OpCounter& b) { return a += b; }
  // Difference of two snapshots taken from the same monotone counter.
  friend OpCounter operator-(const OpCounter& a, const OpCounter& b) {
    return {a.adds - b.adds, a.subs - b.subs, a.muls - b.muls, a.divs - b.divs,
            a.pows - b.pows};
  }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;

  friend std::ostream& operator<<(std::ostream& os, const OpCounter& c) {
    return os << "{+:" << c.adds << " -:" << c.subs << " *:" << c.muls
              << " /:" << c.divs << " pow:" << c.pows << "}";
  }
};

/// Per-thread tally. Workers accumulate here and the caller merges snapshots.
inline OpCounter& thread_op_counter() {
  thread_local OpCounter counter;
  return counter;
}

/// Records the operations performed on this thread during its lifetime.
class OpScope {
 public:
  OpScope() : start_(thread_op_counter()) {}
  OpCounter elapsed() const { return thread_op_counter() - start_; }

 private:
  OpCounter start_;
};

template <class T>
class Counted {
 public:
  using value_type = T;

  constexpr Counted() = default;
  template <class U, std::enable_if_t<std::is_arithmetic_v<U>, int> = 0>
  constexpr Counted(U v) : v_(static_cast<T>(v)) {}

  constexpr T value() const { return v_; }
  template <class U, std::enable_if_t<std::is_arithmetic_v<U>, int> = 0>
  explicit constexpr operator U() const {
    return static_cast<U>(v_);
  }

  friend Counted operator+(Counted a, Counted b) {
    ++thread_op_counter().adds;
    return Counted(a.v_ + b.v_);
  }
  friend Counted operator-(Counted a, Counted b) {
    ++thread_op_counter().subs;
    return Counted(a.v_ - b.v_);
  }
  friend Counted operator*(Counted a, Counted b) {
    ++thread_op_counter().muls;
    return Counted(a.v_ * b.v_);
  }
  friend Counted operator/(Counted a, Counted b) {
    ++thread_op_counter().divs;
    return Counted(a.v_ / b.v_);
  }
  // Sign flips are free.
  friend Counted operator-(Counted a) { return Counted(-a.v_); }

  Counted& operator+=(Counted b) { return *this = *this + b; }
  Counted& operator-=(Counted b) { return *this = *this - b; }
  Counted& operator*=(Counted b) { return *this = *this * b; }
  Counted& operator/=(Counted b) { return *this = *this / b; }

  friend bool operator==(Counted a, Counted b) { return a.v_ == b.v_; }
  friend auto operator<=>(Counted a, Counted b) { return a.v_ <=> b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Counted c) { return os << c.v_; }

 private:
  T v_{};
};

template <class T>
struct is_counted : std::false_type {};
template <class T>
struct is_counted<Counted<T>> : std::true_type {};

/// Plain value of a possibly counted scalar.
template <class T>
constexpr auto raw(const T& x) {
  if constexpr (is_counted<T>::value)
    return x.value();
  else
    return x;
}

/// x^e for e >= 0 by repeated multiplication.  A counted scalar books this as
/// a single power operation rather than e-1 multiplications.
template <class T>
T ipow(const T& x, int e) {
  if constexpr (is_counted<T>::value) {
    ++thread_op_counter().pows;
    typename T::value_type r(1);
    for (int i = 0; i < e; ++i) r *= x.value();
    return T(r);
  } else {
    T r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  }
}

}  // namespace bbspline
