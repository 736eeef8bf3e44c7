#pragma once

#include <string>
#include <vector>

namespace manakov {

// Shortest decimal string that round-trips the double exactly.
std::string format_double(double v);

double parse_double(const std::string& s);

// Write via temp file + rename so readers never see a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace manakov
