#pragma once

#include <string>
#include <string_view>

#include "dtwmean/sequence.hpp"

namespace dtwmean {

enum class DataFormat { Json, Csv };

/// "json" or "csv".
DataFormat parse_format(std::string_view name);
/// From the file extension; JSON unless it ends in ".csv".
DataFormat format_for_path(std::string_view path);

/// JSON: {"dimension": d, "sequences": [[[x1, ..., xd], ...], ...]}.
Dataset parse_dataset_json(std::string_view text);
/// CSV: one vertex per row "seq_id,t,x1,...,xd", rows ordered by (seq_id, t)
/// with t counting 0, 1, ... inside each sequence. A leading header row whose
/// first field is not a number is skipped.
Dataset parse_dataset_csv(std::string_view text);

std::string dataset_to_json(const Dataset& data);
std::string dataset_to_csv(const Dataset& data);

/// Malformed content raises DomainError; unreadable files raise IoError.
Dataset load_dataset(const std::string& path, DataFormat format);
void save_dataset(const std::string& path, const Dataset& data, DataFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace dtwmean
