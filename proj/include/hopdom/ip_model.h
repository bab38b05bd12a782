#ifndef HOPDOM_IP_MODEL_H_
#define HOPDOM_IP_MODEL_H_

#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "hopdom/graph.h"
#include "hopdom/oracle.h"

namespace hopdom {

enum class CoeffKind { kA, kB, kC };

// Dense n x n integer matrix.
//   A: a_ij = 1 if i = j or d(i,j) = 2
//   B: b_ii = -1, b_ij = 1 if ij is an edge
//   C: c_ii = -1, c_ij = 1 if d(i,j) = 2
class CoeffMatrix {
 public:
  CoeffMatrix(CoeffKind kind, int n) : kind_(kind), n_(n), data_(size_t(n) * n) {}

  CoeffKind kind() const { return kind_; }
  int order() const { return n_; }
  int at(int i, int j) const { return data_[size_t(i) * n_ + j]; }
  void set(int i, int j, int value) { data_[size_t(i) * n_ + j] = value; }

 private:
  CoeffKind kind_;
  int n_;
  std::vector<int> data_;
};

CoeffMatrix BuildCoeffMatrix(const Graph& g, const DistanceMatrix& dist,
                             CoeffKind kind);
CoeffMatrix BuildCoeffMatrix(const Graph& g, CoeffKind kind);

enum class Sense { kGe, kLe };
enum class RowRole { kCover, kRestraint };

struct Term {
  int var;
  int coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// sum(coeff * x_var) <sense> rhs, nonzero terms only, sorted by var.
struct Row {
  std::vector<Term> terms;
  Sense sense = Sense::kGe;
  int rhs = 0;
  RowRole role = RowRole::kCover;
  int vertex = 0;  // the i the row was generated for
};

// 0-1 minimisation. Every variable is binary. Strict inequalities from the
// formulations are already normalised: "lhs < k" is stored as "lhs <= k-1".
struct IpInstance {
  int var_count = 0;
  std::vector<int> objective;
  std::vector<Row> rows;
  SetKind label = SetKind::kHop;
  Fingerprint source;

  // Indices of GE rows whose left side has no positive coefficient but whose
  // right side is positive: no assignment can satisfy them.
  std::vector<int> trivially_infeasible_rows() const;
  bool trivially_infeasible() const {
    return !trivially_infeasible_rows().empty();
  }

  // Does the binary vector satisfy every row?
  bool Satisfies(std::span<const int> x) const;
};

// Conventional acronym of the problem: HDP, 2SDP, RHDP, TRHDP, 2SRDP, T2SRDP.
std::string_view ProblemName(SetKind kind);

// Cover rows come from A (diagonal dropped for the total bases 2SDP, TRHDP,
// T2SRDP); restraint rows from B (RHDP, TRHDP, rhs deg(i) - 1) or C
// (2SRDP, T2SRDP, rhs hopdeg(i) - 1). Throws kBadParams for kinds without a
// program (Dominating, TotalDominating).
IpInstance BuildInstance(const Graph& g, SetKind kind);
IpInstance BuildInstance(const Graph& g, const DistanceMatrix& dist,
                         SetKind kind);

// Line format, documented in the README:
//   problem <NAME>
//   source <fingerprint>
//   vars <n>
//   objective <c_0> ... <c_{n-1}>
//   row <cover|restraint> <ge|le> <rhs> : <var>:<coeff> ...
void WriteInstanceText(const IpInstance& inst, std::ostream& out);

}  // namespace hopdom

#endif  // HOPDOM_IP_MODEL_H_
