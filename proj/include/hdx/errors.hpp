#pragma once

#include <stdexcept>
#include <string>

namespace hdx {

/// Error taxonomy. The CLI maps BudgetError subclasses to exit code 3 and
/// InvariantError to exit code 4; everything else is a config/user error.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct BudgetError : Error {
  using Error::Error;
};

struct InvariantError : Error {
  using Error::Error;
};

inline Error index_out_of_range(const std::string& m) { return Error("IndexOutOfRange", m); }
inline Error degree_violation(const std::string& m) { return Error("DegreeViolation", m); }
inline Error ring_mismatch(const std::string& m) { return Error("RingMismatch", m); }
inline Error not_unitriangular(const std::string& m) { return Error("NotUnitriangular", m); }
inline BudgetError group_too_large(const std::string& m) { return BudgetError("GroupTooLarge", m); }
inline Error foreign_element(const std::string& m) { return Error("ForeignElement", m); }
inline Error unreachable(const std::string& m) { return Error("Unreachable", m); }
inline Error not_generating(const std::string& m) { return Error("NotGenerating", m); }
inline Error shape_mismatch(const std::string& m) { return Error("ShapeMismatch", m); }
inline Error not_a_face(const std::string& m) { return Error("NotAFace", m); }
inline Error not_pure(const std::string& m) { return Error("NotPure", m); }
inline Error dim_mismatch(const std::string& m) { return Error("DimMismatch", m); }
inline BudgetError search_space_too_large(const std::string& m) {
  return BudgetError("SearchSpaceTooLarge", m);
}
inline Error no_filling(const std::string& m) { return Error("NoFilling", m); }
inline Error too_many_vertices(const std::string& m) { return Error("TooManyVertices", m); }
inline Error hypothesis_unmet(const std::string& m) { return Error("HypothesisUnmet", m); }
inline Error not_edge_transitive(const std::string& m) { return Error("NotEdgeTransitive", m); }
inline Error disconnected(const std::string& m) { return Error("Disconnected", m); }
inline Error no_match(const std::string& m) { return Error("NoMatch", m); }
inline Error trace_invalid(const std::string& m) { return Error("TraceInvalid", m); }
inline Error path_broken(const std::string& m) { return Error("PathBroken", m); }
inline Error no_group_attached(const std::string& m) { return Error("NoGroupAttached", m); }

}  // namespace hdx
