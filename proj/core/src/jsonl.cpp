#include "mct/jsonl.hpp"

#include <fstream>

#include "mct/errors.hpp"

namespace mct {

void for_each_jsonl_record(
    const std::string& path,
    const std::function<void(std::size_t, const nlohmann::json&)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open record file: " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw IoError(path + ":" + std::to_string(line_no) +
                    ": invalid JSON record: " + e.what());
    }
    if (!record.is_object()) {
      throw IoError(path + ":" + std::to_string(line_no) +
                    ": record is not a JSON object");
    }
    fn(line_no, record);
  }
}

struct JsonlWriter::Impl {
  std::ofstream out;
  std::string path;
};

JsonlWriter::JsonlWriter(const std::string& path) : impl_(new Impl) {
  impl_->path = path;
  impl_->out.open(path, std::ios::binary | std::ios::trunc);
  if (!impl_->out) {
    delete impl_;
    throw IoError("cannot open file for writing: " + path);
  }
}

JsonlWriter::~JsonlWriter() { delete impl_; }

void JsonlWriter::write(const nlohmann::json& record) {
  impl_->out << record.dump() << '\n';
  if (!impl_->out) throw IoError("write failed: " + impl_->path);
}

void JsonlWriter::flush() {
  impl_->out.flush();
  if (!impl_->out) throw IoError("flush failed: " + impl_->path);
}

}  // namespace mct
