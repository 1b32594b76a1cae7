#include "cli/snapshot.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ohwalk::cli {

SnapshotDocument make_snapshot(const AmplitudeField& field, double alpha, double beta) {
  SnapshotDocument doc;
  doc.n = field.n;
  doc.alpha = alpha;
  doc.beta = beta;
  doc.source = field.source;
  doc.time = field.time;
  const auto sites = all_sites(field.n);
  doc.records.reserve(sites.size());
  for (std::size_t k = 0; k < sites.size(); ++k) {
    const Complex a = field.amplitudes[k];
    doc.records.push_back({sites[k].i, sites[k].j, a.real(), a.imag(), std::abs(a)});
  }
  return doc;
}

std::string format_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("cannot serialize a non-finite value");
  // A bare "-0" would be read back by JSON parsers as the integer zero.
  if (value == 0.0 && std::signbit(value)) return "-0.0";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string to_json(const SnapshotDocument& doc) {
  std::ostringstream out;
  out << "{\n"
      << "  \"schema\": \"" << doc.schema << "\",\n"
      << "  \"n\": " << doc.n << ",\n"
      << "  \"alpha\": " << format_double(doc.alpha) << ",\n"
      << "  \"beta\": " << format_double(doc.beta) << ",\n"
      << "  \"source\": [" << doc.source.i << ", " << doc.source.j << "],\n"
      << "  \"time\": " << format_double(doc.time) << ",\n"
      << "  \"records\": [";
  for (std::size_t k = 0; k < doc.records.size(); ++k) {
    const auto& r = doc.records[k];
    out << (k ? ",\n" : "\n") << "    {\"i\": " << r.i << ", \"j\": " << r.j << ", \"re\": " << format_double(r.re)
        << ", \"im\": " << format_double(r.im) << ", \"abs\": " << format_double(r.abs) << "}";
  }
  out << (doc.records.empty() ? "]\n" : "\n  ]\n") << "}";
  return out.str();
}

std::string to_json(const std::vector<SnapshotDocument>& docs) {
  std::string out = "[";
  for (std::size_t k = 0; k < docs.size(); ++k) {
    out += k ? ",\n" : "\n";
    out += to_json(docs[k]);
  }
  out += docs.empty() ? "]\n" : "\n]\n";
  return out;
}

std::string to_csv(const SnapshotDocument& doc) {
  std::string out = "i,j,re,im,abs\n";
  for (const auto& r : doc.records) {
    out += std::to_string(r.i) + "," + std::to_string(r.j) + "," + format_double(r.re) + "," + format_double(r.im) +
           "," + format_double(r.abs) + "\n";
  }
  return out;
}

namespace {

double parse_number(const std::string& text) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) throw std::invalid_argument("malformed number '" + text + "'");
  return value;
}

}  // namespace

SnapshotDocument snapshot_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("snapshot is not valid JSON: ") + e.what());
  }
  try {
    SnapshotDocument doc;
    doc.schema = j.at("schema").get<std::string>();
    if (doc.schema != kSnapshotSchema) throw std::invalid_argument("unsupported snapshot schema '" + doc.schema + "'");
    doc.n = j.at("n").get<int>();
    doc.alpha = j.at("alpha").get<double>();
    doc.beta = j.at("beta").get<double>();
    doc.source = {j.at("source").at(0).get<int>(), j.at("source").at(1).get<int>()};
    doc.time = j.at("time").get<double>();
    for (const auto& r : j.at("records")) {
      doc.records.push_back({r.at("i").get<int>(), r.at("j").get<int>(), r.at("re").get<double>(),
                             r.at("im").get<double>(), r.at("abs").get<double>()});
    }
    if (doc.records.size() != site_count(doc.n)) {
      throw std::invalid_argument("snapshot has " + std::to_string(doc.records.size()) + " records, expected " +
                                  std::to_string(site_count(doc.n)));
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed snapshot: ") + e.what());
  }
}

std::vector<SnapshotRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "i,j,re,im,abs") throw std::invalid_argument("missing CSV header");
  std::vector<SnapshotRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string cell[5];
    for (auto& c : cell) {
      if (!std::getline(fields, c, ',')) throw std::invalid_argument("short CSV row '" + line + "'");
    }
    out.push_back({std::stoi(cell[0]), std::stoi(cell[1]), parse_number(cell[2]), parse_number(cell[3]),
                   parse_number(cell[4])});
  }
  return out;
}

}  // namespace ohwalk::cli
