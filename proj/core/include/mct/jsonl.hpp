#pragma once

#include <functional>
#include <string>

#include <json.hpp>

namespace mct {

/// Calls `fn(line_number, parsed_object)` for every non-empty line of a
/// line-delimited JSON file. Line numbers are 1-based. Throws IoError for a
/// missing file or a line that is not a JSON object (message carries the line
/// number).
void for_each_jsonl_record(
    const std::string& path,
    const std::function<void(std::size_t, const nlohmann::json&)>& fn);

/// Serializes one record per line with a trailing newline, keys in sorted
/// order so rewrites are byte-stable.
class JsonlWriter {
 public:
  explicit JsonlWriter(const std::string& path);
  ~JsonlWriter();

  JsonlWriter(const JsonlWriter&) = delete;
  JsonlWriter& operator=(const JsonlWriter&) = delete;

  void write(const nlohmann::json& record);
  void flush();

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace mct
