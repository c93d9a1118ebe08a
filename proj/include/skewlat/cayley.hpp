// Cayley table representation of two-operation algebras, validation of the
// skew lattice axioms, and the natural preorder / partial order.

#ifndef SKEWLAT_CAYLEY_HPP_
#define SKEWLAT_CAYLEY_HPP_

#include <concepts>  // for convertible_to
#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t, uint8_t
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

namespace skewlat {

  using element_type = std::uint32_t;

  //! Anything with a size and two binary operations on 0..size()-1.
  template <typename T>
  concept BinaryAlgebra = requires(T const& a, element_type x) {
    { a.size() } -> std::convertible_to<std::size_t>;
    { a.meet(x, x) } -> std::convertible_to<element_type>;
    { a.join(x, x) } -> std::convertible_to<element_type>;
  };

  //! Two n x n operation tables over {0, ..., n - 1}, stored row-major. This
  //! is a raw candidate algebra: the only guarantees are n >= 1 and that every
  //! entry is in range (checked on construction, throws MalformedInput).
  class CayleyPair {
   public:
    CayleyPair(std::size_t                n,
               std::vector<element_type> meet,
               std::vector<element_type> join);

    static CayleyPair
    from_rows(std::vector<std::vector<element_type>> const& meet,
              std::vector<std::vector<element_type>> const& join);

    std::size_t size() const noexcept {
      return _n;
    }

    element_type meet(element_type x, element_type y) const noexcept {
      return _meet[x * _n + y];
    }

    element_type join(element_type x, element_type y) const noexcept {
      return _join[x * _n + y];
    }

    std::span<element_type const> meet_table() const noexcept {
      return _meet;
    }

    std::span<element_type const> join_table() const noexcept {
      return _join;
    }

    bool operator==(CayleyPair const&) const = default;
    auto operator<=>(CayleyPair const& that) const {
      if (auto c = _n <=> that._n; c != 0) {
        return c;
      }
      if (auto c = _meet <=> that._meet; c != 0) {
        return c;
      }
      return _join <=> that._join;
    }

   private:
    std::size_t               _n;
    std::vector<element_type> _meet;
    std::vector<element_type> _join;
  };

  //! One failed axiom instance.
  struct Violation {
    std::string               axiom;
    std::vector<element_type> witness;

    //! e.g. "idempotency of meet at x=0"
    std::string describe() const;
  };

  class ValidationResult;

  //! A CayleyPair known to satisfy the skew lattice axioms. The only way to
  //! obtain one is through validate (or make_skew_lattice), so every instance
  //! is immutable and valid.
  class SkewLattice {
   public:
    std::size_t size() const noexcept {
      return _tables.size();
    }

    element_type meet(element_type x, element_type y) const noexcept {
      return _tables.meet(x, y);
    }

    element_type join(element_type x, element_type y) const noexcept {
      return _tables.join(x, y);
    }

    // Bounds-checked versions; throw InvalidArgument.
    element_type meet_at(element_type x, element_type y) const;
    element_type join_at(element_type x, element_type y) const;

    CayleyPair const& tables() const noexcept {
      return _tables;
    }

    bool operator==(SkewLattice const&) const = default;

   private:
    explicit SkewLattice(CayleyPair t) : _tables(std::move(t)) {}
    friend ValidationResult validate(CayleyPair const&);

    CayleyPair _tables;
  };

  class ValidationResult {
   public:
    bool ok() const noexcept {
      return _violations.empty();
    }

    explicit operator bool() const noexcept {
      return ok();
    }

    //! Throws AxiomViolation if !ok().
    SkewLattice const& lattice() const;

    std::vector<Violation> const& violations() const noexcept {
      return _violations;
    }

   private:
    friend ValidationResult validate(CayleyPair const&);
    ValidationResult() = default;

    std::vector<SkewLattice> _lattice;  // empty or one element
    std::vector<Violation>   _violations;
  };

  //! Checks idempotency, associativity of both operations and the four
  //! absorption laws, collecting every failing instance. When the axioms hold
  //! the dualities and both regularity identities are checked as well; their
  //! failure throws InternalInconsistency.
  ValidationResult validate(CayleyPair const& tables);

  //! validate(tables).lattice()
  SkewLattice make_skew_lattice(CayleyPair const& tables);

  //! Natural preorder and natural partial order as n x n boolean matrices.
  struct ElementPairOrder {
    std::size_t               n = 0;
    std::vector<std::uint8_t> preceq;
    std::vector<std::uint8_t> leq;

    bool preceq_at(element_type x, element_type y) const noexcept {
      return preceq[x * n + y] != 0;
    }
    bool leq_at(element_type x, element_type y) const noexcept {
      return leq[x * n + y] != 0;
    }
  };

  //! x <= y  iff  x ^ y = x = y ^ x;  x =< y (preorder) iff x ^ y ^ x = x.
  //! Both are cross-checked against the join formulations.
  ElementPairOrder orders(SkewLattice const& S);

  inline bool preceq(SkewLattice const& S, element_type x, element_type y) {
    return S.meet(S.meet(x, y), x) == x;
  }

  inline bool leq(SkewLattice const& S, element_type x, element_type y) {
    return S.meet(x, y) == x && S.meet(y, x) == x;
  }

  //! Same set with x ^' y = y ^ x and x v' y = y v x. Swaps handedness.
  SkewLattice opposite(SkewLattice const& S);

  //! Same set with the two operations exchanged.
  SkewLattice dual(SkewLattice const& S);

  //! Both operations commutative.
  bool is_lattice(SkewLattice const& S);

}  // namespace skewlat

#endif  // SKEWLAT_CAYLEY_HPP_
