#include "dtwmean/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace dtwmean {

DataFormat parse_format(std::string_view name) {
  if (name == "json") return DataFormat::Json;
  if (name == "csv") return DataFormat::Csv;
  throw DomainError("unknown format '" + std::string(name) + "'");
}

DataFormat format_for_path(std::string_view path) {
  return path.ends_with(".csv") ? DataFormat::Csv : DataFormat::Json;
}

Dataset parse_dataset_json(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw DomainError("dataset is empty");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed JSON dataset: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("sequences") || !doc["sequences"].is_array()) {
    throw DomainError("JSON dataset needs a \"sequences\" array");
  }
  std::size_t dim = 0;
  if (doc.contains("dimension")) {
    if (!doc["dimension"].is_number_unsigned() || doc["dimension"].get<std::size_t>() == 0) {
      throw DomainError("\"dimension\" must be a positive integer");
    }
    dim = doc["dimension"].get<std::size_t>();
  }
  std::vector<PointSequence> seqs;
  const auto& arr = doc["sequences"];
  for (std::size_t s = 0; s < arr.size(); ++s) {
    const auto& seq = arr[s];
    if (!seq.is_array() || seq.empty()) {
      throw DomainError("sequence " + std::to_string(s) + " must be a nonempty array of points");
    }
    std::vector<double> coords;
    for (std::size_t t = 0; t < seq.size(); ++t) {
      const auto& pt = seq[t];
      const std::string where = "sequence " + std::to_string(s) + ", vertex " + std::to_string(t);
      if (!pt.is_array() || pt.empty()) throw DomainError(where + ": point must be a nonempty array");
      if (dim == 0) dim = pt.size();
      if (pt.size() != dim) {
        throw DomainError(where + ": expected " + std::to_string(dim) + " coordinates, got " +
                          std::to_string(pt.size()));
      }
      for (const auto& x : pt) {
        if (!x.is_number()) throw DomainError(where + ": coordinates must be numbers");
        coords.push_back(x.get<double>());
      }
    }
    try {
      seqs.emplace_back(dim, std::move(coords));
    } catch (const DomainError& e) {
      throw DomainError("sequence " + std::to_string(s) + ": " + e.what());
    }
  }
  return Dataset(std::move(seqs));
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

bool parse_number(const std::string& raw, double& out) {
  const auto b = raw.find_first_not_of(" \t");
  if (b == std::string::npos) return false;
  const auto e = raw.find_last_not_of(" \t");
  const std::string s = raw.substr(b, e - b + 1);
  char* end = nullptr;
  errno = 0;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && errno != ERANGE;
}

bool parse_index(const std::string& raw, long long& out) {
  double v = 0.0;
  if (!parse_number(raw, v) || v != std::floor(v) || v < 0) return false;
  out = static_cast<long long>(v);
  return true;
}

}  // namespace

Dataset parse_dataset_csv(std::string_view text) {
  std::stringstream in{std::string(text)};
  std::string line;
  std::size_t row = 0;
  std::size_t arity = 0;
  bool have_seq = false;
  long long current_id = 0;
  long long expected_t = 0;
  std::vector<PointSequence> seqs;
  std::vector<double> coords;
  std::size_t dim = 0;
  bool first_content = true;

  auto flush = [&] {
    if (have_seq) seqs.emplace_back(dim, std::move(coords));
    coords.clear();
  };

  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::vector<std::string> fields = split_fields(line);
    const std::string where = "row " + std::to_string(row);
    double probe = 0.0;
    if (first_content) {
      first_content = false;
      if (!fields.empty() && !parse_number(fields[0], probe)) continue;
    }
    if (fields.size() < 3) {
      throw DomainError(where + ": expected seq_id,t,x1..xd with d >= 1, got " +
                        std::to_string(fields.size()) + " fields");
    }
    if (arity == 0) {
      arity = fields.size();
      dim = arity - 2;
    } else if (fields.size() != arity) {
      throw DomainError(where + ": expected " + std::to_string(arity) + " fields, got " +
                        std::to_string(fields.size()));
    }
    long long id = 0;
    long long t = 0;
    if (!parse_index(fields[0], id)) throw DomainError(where + ": bad seq_id '" + fields[0] + "'");
    if (!parse_index(fields[1], t)) throw DomainError(where + ": bad t '" + fields[1] + "'");
    if (!have_seq || id != current_id) {
      if (have_seq && id < current_id) throw DomainError(where + ": rows not ordered by seq_id");
      flush();
      have_seq = true;
      current_id = id;
      expected_t = 0;
    }
    if (t != expected_t) {
      throw DomainError(where + ": expected t = " + std::to_string(expected_t) + " in sequence " +
                        std::to_string(id));
    }
    ++expected_t;
    for (std::size_t c = 2; c < fields.size(); ++c) {
      double x = 0.0;
      if (!parse_number(fields[c], x) || !std::isfinite(x)) {
        throw DomainError(where + ": bad coordinate '" + fields[c] + "'");
      }
      coords.push_back(x);
    }
  }
  flush();
  if (seqs.empty()) throw DomainError("dataset is empty");
  return Dataset(std::move(seqs));
}

std::string dataset_to_json(const Dataset& data) {
  nlohmann::json doc;
  doc["dimension"] = data.dimension();
  nlohmann::json seqs = nlohmann::json::array();
  for (const PointSequence& s : data) {
    nlohmann::json pts = nlohmann::json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const PointView v = s[i];
      pts.push_back(std::vector<double>(v.begin(), v.end()));
    }
    seqs.push_back(std::move(pts));
  }
  doc["sequences"] = std::move(seqs);
  return doc.dump() + "\n";
}

std::string dataset_to_csv(const Dataset& data) {
  std::string out = "seq_id,t";
  for (std::size_t c = 0; c < data.dimension(); ++c) out += ",x" + std::to_string(c + 1);
  out += "\n";
  for (std::size_t s = 0; s < data.size(); ++s) {
    for (std::size_t t = 0; t < data[s].size(); ++t) {
      out += std::to_string(s) + "," + std::to_string(t);
      for (double x : data[s][t]) out += "," + nlohmann::json(x).dump();
      out += "\n";
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("error writing '" + path + "'");
}

Dataset load_dataset(const std::string& path, DataFormat format) {
  const std::string text = read_file(path);
  return format == DataFormat::Csv ? parse_dataset_csv(text) : parse_dataset_json(text);
}

void save_dataset(const std::string& path, const Dataset& data, DataFormat format) {
  write_file(path, format == DataFormat::Csv ? dataset_to_csv(data) : dataset_to_json(data));
}

}  // namespace dtwmean
