#pragma once

#include <string>
#include <vector>

#include "ohwalk/dynamics.hpp"
#include "ohwalk/lattice.hpp"

namespace ohwalk::cli {

inline constexpr const char* kSnapshotSchema = "ohwalk-snapshot/1";

struct SnapshotRecord {
  int i = 0;
  int j = 0;
  double re = 0.0;
  double im = 0.0;
  double abs = 0.0;

  friend bool operator==(const SnapshotRecord&, const SnapshotRecord&) = default;
};

/// Serialized AmplitudeField. Records follow site_index order.
struct SnapshotDocument {
  std::string schema = kSnapshotSchema;
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  Site source;
  double time = 0.0;
  std::vector<SnapshotRecord> records;

  friend bool operator==(const SnapshotDocument&, const SnapshotDocument&) = default;
};

SnapshotDocument make_snapshot(const AmplitudeField& field, double alpha, double beta);

/// "%.17g"; every finite double survives a text round trip bit-exactly.
std::string format_double(double value);

/// Byte-stable JSON text for one document.
std::string to_json(const SnapshotDocument& doc);
/// Byte-stable JSON array of documents.
std::string to_json(const std::vector<SnapshotDocument>& docs);
/// CSV with header i,j,re,im,abs.
std::string to_csv(const SnapshotDocument& doc);

/// Throws std::invalid_argument on a schema mismatch or malformed document.
SnapshotDocument snapshot_from_json(const std::string& text);
std::vector<SnapshotRecord> records_from_csv(const std::string& text);

}  // namespace ohwalk::cli
