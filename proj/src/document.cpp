#include "mobius/document.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mobius/error.hpp"
#include "mobius/numeric.hpp"

namespace mobius {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::optional<PointId> lookup(const SpaceDocument& doc, const std::string& label) {
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    if (doc.points[i] == label) return PointId{i};
  }
  return std::nullopt;
}

PointId require(const SpaceDocument& doc, const std::string& label, const char* field) {
  if (auto id = lookup(doc, label)) return *id;
  throw Error(ErrorKind::Parse, std::string(field) + " names unknown point '" + label + "'");
}

void check_label(const std::string& label) {
  if (label.empty() || label.find_first_of(" \t\r\n#") != std::string::npos) {
    throw Error(ErrorKind::Parameter, "label '" + label + "' cannot be written to a document");
  }
}

}  // namespace

std::string format_number(double value) {
  if (std::isinf(value) && value > 0) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

double parse_number(const std::string& token) {
  if (token == "inf" || token == "+inf") return kInf;
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  if (!token.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) throw Error(ErrorKind::Parse, "not a number: '" + token + "'");
  return value;
}

SpaceDocument parse_document(const std::string& text) {
  SpaceDocument doc;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool seen_kind = false, seen_points = false, in_matrix = false;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    const auto where = [&] { return " (line " + std::to_string(line_no) + ")"; };
    if (in_matrix) {
      std::vector<double> row;
      for (const auto& token : split(body)) {
        try {
          row.push_back(parse_number(token));
        } catch (const Error& e) {
          throw Error(ErrorKind::Parse, std::string(e.what()) + where());
        }
      }
      rows.push_back(std::move(row));
      continue;
    }
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "expected 'key: value'" + where());
    const std::string key = trim(body.substr(0, colon));
    const std::string value = trim(body.substr(colon + 1));
    if (key == "name") {
      doc.name = value;
    } else if (key == "kind") {
      if (value == "metric") doc.kind = SpaceKind::Metric;
      else if (value == "quasi") doc.kind = SpaceKind::Quasi;
      else throw Error(ErrorKind::Parse, "kind must be metric or quasi" + where());
      seen_kind = true;
    } else if (key == "points") {
      doc.points = split(value);
      seen_points = true;
    } else if (key == "remote") {
      doc.remote = value;
    } else if (key == "K") {
      try {
        doc.K = parse_number(value);
      } catch (const Error&) {
        throw Error(ErrorKind::Parse, "K must be a number" + where());
      }
    } else if (key == "remote_set") {
      doc.remote_set = split(value);
    } else if (key == "basepoint") {
      doc.basepoint = value;
    } else if (key == "matrix") {
      if (!value.empty()) throw Error(ErrorKind::Parse, "matrix rows start on the next line" + where());
      in_matrix = true;
    } else {
      throw Error(ErrorKind::Parse, "unknown key '" + key + "'" + where());
    }
  }
  if (!seen_kind) throw Error(ErrorKind::Parse, "missing 'kind'");
  if (!seen_points) throw Error(ErrorKind::Parse, "missing 'points'");
  if (!in_matrix) throw Error(ErrorKind::Parse, "missing 'matrix'");
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(ErrorKind::Parse, "matrix rows are ragged or not square");
  }
  if (rows.size() != doc.points.size()) {
    throw Error(ErrorKind::Parse, "matrix has " + std::to_string(rows.size()) + " rows for " +
                                      std::to_string(doc.points.size()) + " points");
  }
  doc.matrix = DistanceMatrix::from_rows(rows);
  if (doc.kind == SpaceKind::Quasi && !doc.K) throw Error(ErrorKind::Parse, "quasi documents need K");
  if (doc.kind == SpaceKind::Metric && (doc.K || !doc.remote_set.empty())) {
    throw Error(ErrorKind::Parse, "K and remote_set belong to quasi documents");
  }
  if (doc.kind == SpaceKind::Quasi && doc.remote) {
    throw Error(ErrorKind::Parse, "quasi documents use remote_set, not remote");
  }
  if (doc.remote) require(doc, *doc.remote, "remote");
  if (doc.basepoint) require(doc, *doc.basepoint, "basepoint");
  for (const auto& r : doc.remote_set) require(doc, r, "remote_set");
  return doc;
}

std::string format_document(const SpaceDocument& doc) {
  std::ostringstream out;
  for (const auto& label : doc.points) check_label(label);
  if (!doc.name.empty()) out << "name: " << doc.name << '\n';
  out << "kind: " << (doc.kind == SpaceKind::Metric ? "metric" : "quasi") << '\n';
  out << "points:";
  for (const auto& label : doc.points) out << ' ' << label;
  out << '\n';
  if (doc.remote) out << "remote: " << *doc.remote << '\n';
  if (doc.K) out << "K: " << format_number(*doc.K) << '\n';
  if (!doc.remote_set.empty()) {
    out << "remote_set:";
    for (const auto& label : doc.remote_set) out << ' ' << label;
    out << '\n';
  }
  if (doc.basepoint) out << "basepoint: " << *doc.basepoint << '\n';
  out << "matrix:\n";
  for (std::size_t i = 0; i < doc.matrix.size(); ++i) {
    for (std::size_t j = 0; j < doc.matrix.size(); ++j) {
      out << (j ? " " : "") << format_number(doc.matrix(i, j));
    }
    out << '\n';
  }
  return out.str();
}

SpaceDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

void write_document(const std::string& path, const SpaceDocument& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parameter, "cannot write '" + path + "'");
  out << format_document(doc);
}

SpaceDocument make_document(const std::string& name, const ExtendedMetricSpace& space,
                            std::optional<PointId> basepoint) {
  SpaceDocument doc;
  doc.name = name;
  doc.kind = SpaceKind::Metric;
  doc.points = space.labels();
  doc.matrix = space.matrix();
  if (space.remote()) doc.remote = space.label(*space.remote());
  if (basepoint) doc.basepoint = space.label(*basepoint);
  return doc;
}

SpaceDocument make_document(const std::string& name, const QuasiMetricSpace& space,
                            std::optional<PointId> basepoint) {
  SpaceDocument doc;
  doc.name = name;
  doc.kind = SpaceKind::Quasi;
  doc.points = space.labels();
  doc.matrix = space.matrix();
  doc.K = space.K();
  for (auto r : space.remote_set()) doc.remote_set.push_back(space.label(r));
  if (basepoint) doc.basepoint = space.label(*basepoint);
  return doc;
}

ExtendedMetricSpace to_metric_space(const SpaceDocument& doc) {
  if (doc.kind != SpaceKind::Metric) throw Error(ErrorKind::Parse, "document describes a quasi-metric");
  std::optional<PointId> remote;
  if (doc.remote) remote = require(doc, *doc.remote, "remote");
  return ExtendedMetricSpace(doc.points, doc.matrix, remote);
}

QuasiMetricSpace to_quasi_space(const SpaceDocument& doc) {
  if (doc.kind == SpaceKind::Metric) return to_quasi(to_metric_space(doc));
  std::vector<PointId> remote_set;
  for (const auto& r : doc.remote_set) remote_set.push_back(require(doc, r, "remote_set"));
  return QuasiMetricSpace(doc.points, doc.matrix, *doc.K, std::move(remote_set));
}

std::optional<PointId> basepoint_of(const SpaceDocument& doc) {
  if (!doc.basepoint) return std::nullopt;
  return require(doc, *doc.basepoint, "basepoint");
}

}  // namespace mobius
