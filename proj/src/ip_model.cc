#include "hopdom/ip_model.h"

#include <string>

#include "hopdom/error.h"

namespace hopdom {

CoeffMatrix BuildCoeffMatrix(const Graph& g, CoeffKind kind) {
  return BuildCoeffMatrix(g, AllPairsDistance(g), kind);
}

CoeffMatrix BuildCoeffMatrix(const Graph& g, const DistanceMatrix& dist,
                             CoeffKind kind) {
  const int n = g.order();
  CoeffMatrix m(kind, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int value = 0;
      switch (kind) {
        case CoeffKind::kA:
          value = (i == j || dist.at_distance_two(i, j)) ? 1 : 0;
          break;
        case CoeffKind::kB:
          value = i == j ? -1 : (g.adjacent(i, j) ? 1 : 0);
          break;
        case CoeffKind::kC:
          value = i == j ? -1 : (dist.at_distance_two(i, j) ? 1 : 0);
          break;
      }
      m.set(i, j, value);
    }
  }
  return m;
}

std::vector<int> IpInstance::trivially_infeasible_rows() const {
  std::vector<int> out;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    const Row& row = rows[r];
    if (row.sense != Sense::kGe || row.rhs <= 0) continue;
    bool any_positive = false;
    for (const Term& t : row.terms) any_positive |= t.coeff > 0;
    if (!any_positive) out.push_back(r);
  }
  return out;
}

bool IpInstance::Satisfies(std::span<const int> x) const {
  if (static_cast<int>(x.size()) != var_count) {
    throw Error(ErrorCode::kDimensionMismatch,
                "assignment has " + std::to_string(x.size()) +
                    " entries, instance has " + std::to_string(var_count));
  }
  for (const Row& row : rows) {
    long long lhs = 0;
    for (const Term& t : row.terms) lhs += static_cast<long long>(t.coeff) * x[t.var];
    if (row.sense == Sense::kGe ? lhs < row.rhs : lhs > row.rhs) return false;
  }
  return true;
}

std::string_view ProblemName(SetKind kind) {
  switch (kind) {
    case SetKind::kHop: return "HDP";
    case SetKind::kTwoStep: return "2SDP";
    case SetKind::kRestrainedHop: return "RHDP";
    case SetKind::kTotalRestrainedHop: return "TRHDP";
    case SetKind::kTwoStepRestrained: return "2SRDP";
    case SetKind::kTotalTwoStepRestrained: return "T2SRDP";
    default: return "";
  }
}

IpInstance BuildInstance(const Graph& g, SetKind kind) {
  return BuildInstance(g, AllPairsDistance(g), kind);
}

IpInstance BuildInstance(const Graph& g, const DistanceMatrix& dist,
                         SetKind kind) {
  bool total_base = false;
  CoeffKind restraint = CoeffKind::kA;  // kA: no restraint rows
  switch (kind) {
    case SetKind::kHop: break;
    case SetKind::kTwoStep: total_base = true; break;
    case SetKind::kRestrainedHop: restraint = CoeffKind::kB; break;
    case SetKind::kTotalRestrainedHop:
      total_base = true;
      restraint = CoeffKind::kB;
      break;
    case SetKind::kTwoStepRestrained: restraint = CoeffKind::kC; break;
    case SetKind::kTotalTwoStepRestrained:
      total_base = true;
      restraint = CoeffKind::kC;
      break;
    default:
      throw Error(ErrorCode::kBadParams,
                  "no integer program for kind " + std::string(KindName(kind)));
  }

  const int n = g.order();
  IpInstance inst;
  inst.var_count = n;
  inst.objective.assign(n, 1);
  inst.label = kind;
  inst.source = FingerprintOf(g);

  const CoeffMatrix a = BuildCoeffMatrix(g, dist, CoeffKind::kA);
  for (int i = 0; i < n; ++i) {
    Row row{.terms = {}, .sense = Sense::kGe, .rhs = 1, .role = RowRole::kCover, .vertex = i};
    for (int j = 0; j < n; ++j) {
      if (total_base && j == i) continue;
      if (a.at(i, j) != 0) row.terms.push_back({j, a.at(i, j)});
    }
    inst.rows.push_back(std::move(row));
  }

  if (restraint != CoeffKind::kA) {
    const CoeffMatrix m = BuildCoeffMatrix(g, dist, restraint);
    for (int i = 0; i < n; ++i) {
      // Row sums of the off-diagonal part are deg(i) for B and hopdeg(i)
      // for C, which is exactly the strict right-hand side.
      int strict_rhs = 0;
      Row row{.terms = {}, .sense = Sense::kLe, .rhs = 0, .role = RowRole::kRestraint, .vertex = i};
      for (int j = 0; j < n; ++j) {
        if (m.at(i, j) != 0) row.terms.push_back({j, m.at(i, j)});
        if (j != i) strict_rhs += m.at(i, j);
      }
      row.rhs = strict_rhs - 1;
      inst.rows.push_back(std::move(row));
    }
  }
  return inst;
}

void WriteInstanceText(const IpInstance& inst, std::ostream& out) {
  out << "problem " << ProblemName(inst.label) << '\n';
  out << "source " << inst.source.ToString() << '\n';
  out << "vars " << inst.var_count << '\n';
  out << "objective";
  for (int c : inst.objective) out << ' ' << c;
  out << '\n';
  for (const Row& row : inst.rows) {
    out << "row " << (row.role == RowRole::kCover ? "cover" : "restraint") << ' '
        << (row.sense == Sense::kGe ? "ge" : "le") << ' ' << row.rhs << " :";
    for (const Term& t : row.terms) out << ' ' << t.var << ':' << t.coeff;
    out << '\n';
  }
}

}  // namespace hopdom
