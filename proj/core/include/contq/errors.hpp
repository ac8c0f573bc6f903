#pragma once

#include <stdexcept>
#include <string>

namespace contq {

enum class errc {
  not_invariant,
  not_sink,
  not_source,
  not_extremal,
  no_neighbor,
  out_of_window,
  incomparable,
  field_mismatch,
  quiver_mismatch,
  schema_error,
  not_in_subcategory,
  round_trip_mismatch,
  paper_inconsistency,
  decomposition_mismatch,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_invariant: return "NotInvariant";
    case errc::not_sink: return "NotSink";
    case errc::not_source: return "NotSource";
    case errc::not_extremal: return "NotExtremal";
    case errc::no_neighbor: return "NoNeighbor";
    case errc::out_of_window: return "OutOfWindow";
    case errc::incomparable: return "Incomparable";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::quiver_mismatch: return "QuiverMismatch";
    case errc::schema_error: return "SchemaError";
    case errc::not_in_subcategory: return "NotInSubcategory";
    case errc::round_trip_mismatch: return "RoundTripMismatch";
    case errc::paper_inconsistency: return "PaperInconsistency";
    case errc::decomposition_mismatch: return "DecompositionMismatch";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace contq
