#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gbswitch/tensor.hpp"

namespace gbswitch {

/// {"m": <int>, "n": <int>, "entries": [±1, …]} with n^m entries in
/// row-major order. Anything else is rejected with ErrorKind::ParseError
/// (or the matching tensor validation error).
SignTensor tensor_from_json(std::string_view text);
std::string tensor_to_json(const SignTensor& t);

SignTensor read_tensor_file(const std::filesystem::path& path);
void write_tensor_file(const std::filesystem::path& path, const SignTensor& t);

}  // namespace gbswitch
