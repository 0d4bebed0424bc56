#pragma once

#include <stdexcept>
#include <string>

namespace cutlab {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define CUTLAB_ERROR(Name)                                             \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what = "") : Error(#Name, what) {} \
  };

CUTLAB_ERROR(SelfLoop)
CUTLAB_ERROR(DuplicateEdge)
CUTLAB_ERROR(DanglingId)
CUTLAB_ERROR(BadParams)
CUTLAB_ERROR(NoFrontier)
CUTLAB_ERROR(StabilityError)
CUTLAB_ERROR(GraphMismatch)
CUTLAB_ERROR(Inadmissible)
CUTLAB_ERROR(ShadowSplit)
CUTLAB_ERROR(DimensionMismatch)
CUTLAB_ERROR(BudgetExceeded)
CUTLAB_ERROR(NotElliptic)
CUTLAB_ERROR(EllipticityViolation)
CUTLAB_ERROR(NoSeparator)
CUTLAB_ERROR(ContainsTrivial)
CUTLAB_ERROR(InadmissiblePullback)
CUTLAB_ERROR(NoSequence)
CUTLAB_ERROR(PreconditionError)
CUTLAB_ERROR(FormatError)

#undef CUTLAB_ERROR

class KMaxExhausted : public Error {
 public:
  explicit KMaxExhausted(int k_max)
      : Error("KMaxExhausted", "no separating cut with |delta| <= " + std::to_string(k_max)),
        k_max(k_max) {}
  int k_max;
};

class IncompleteNestedSet : public Error {
 public:
  IncompleteNestedSet(std::size_t rank, std::size_t target)
      : Error("IncompleteNestedSet",
              "rank " + std::to_string(rank) + " of " + std::to_string(target)),
        rank(rank), target(target) {}
  std::size_t rank, target;
};

class InadmissibleLift : public Error {
 public:
  InadmissibleLift(int peripheral, const std::string& name)
      : Error("InadmissibleLift", "cone edges of " + name + " touch the frontier"),
        peripheral(peripheral) {}
  int peripheral;
};

class NotNested : public Error {
 public:
  NotNested(int a, int b)
      : Error("NotNested", "cuts " + std::to_string(a) + " and " + std::to_string(b) + " cross"),
        a(a), b(b) {}
  int a, b;
};

class NoFixedVertex : public Error {
 public:
  explicit NoFixedVertex(int pair)
      : Error("NoFixedVertex", "orientation not upward closed at pair " + std::to_string(pair)),
        pair(pair) {}
  int pair;
};

class ChainViolation : public Error {
 public:
  ChainViolation(int a, int b)
      : Error("ChainViolation", "members " + std::to_string(a) + " and " + std::to_string(b) +
                                    " are incomparable"),
        a(a), b(b) {}
  int a, b;
};

}  // namespace cutlab
