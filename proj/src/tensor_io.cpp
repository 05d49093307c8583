#include "gbswitch/tensor_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gbswitch {

namespace {

std::size_t read_positive(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    throw Error(ErrorKind::ParseError, std::string("field \"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

SignTensor tensor_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "tensor document must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "m" && key != "n" && key != "entries") {
      throw Error(ErrorKind::ParseError, "unexpected field \"" + key + "\"");
    }
  }
  const DimSpec dims(read_positive(doc, "m"), read_positive(doc, "n"));
  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    throw Error(ErrorKind::ParseError, "field \"entries\" must be an array");
  }
  const auto& arr = doc.at("entries");
  if (arr.size() != dims.size()) {
    throw Error(ErrorKind::LengthMismatch, "got " + std::to_string(arr.size()) + " entries, expected " +
                                               std::to_string(dims.size()));
  }
  std::vector<std::int8_t> entries(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& v = arr[i];
    if (!v.is_number_integer()) {
      throw Error(ErrorKind::NonUnimodularEntry, "entry " + std::to_string(i) + " is not an integer");
    }
    const auto x = v.get<std::int64_t>();
    if (x != 1 && x != -1) {
      throw Error(ErrorKind::NonUnimodularEntry,
                  "value " + std::to_string(x) + " at position " + std::to_string(i));
    }
    entries[i] = static_cast<std::int8_t>(x);
  }
  return {dims, std::move(entries)};
}

std::string tensor_to_json(const SignTensor& t) {
  nlohmann::ordered_json doc;
  doc["m"] = t.dims().m();
  doc["n"] = t.dims().n();
  auto& entries = doc["entries"] = nlohmann::ordered_json::array();
  for (std::int8_t e : t.entries()) entries.push_back(static_cast<int>(e));
  return doc.dump();
}

SignTensor read_tensor_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return tensor_from_json(buffer.str());
}

void write_tensor_file(const std::filesystem::path& path, const SignTensor& t) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << tensor_to_json(t) << '\n';
}

}  // namespace gbswitch
