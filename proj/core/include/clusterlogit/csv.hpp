#pragma once

#include <istream>
#include <string>

#include "clusterlogit/data_model.hpp"

namespace clusterlogit {

// Reads comma-separated text: one header row, UTF-8, "." decimal separator.
// Empty cells stay empty strings and are rejected later if a used column
// needs them. No quoting or escaping.
InputTable read_csv(std::istream& in);
InputTable read_csv_file(const std::string& path);

}  // namespace clusterlogit
