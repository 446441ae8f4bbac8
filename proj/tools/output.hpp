#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

using Json = nlohmann::ordered_json;

/// Invalid command-line configuration; exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kManifestSchema = "codedomain.manifest/1";

/// Writes the files of one run. Every file carries the manifest header (schema,
/// generator, command, effective config) in a form its format allows:
/// '#' lines for CSV and code files, a "manifest" member for JSON, a comment
/// for SVG. finish() adds manifest.json with the file list and run status.
class OutputSet {
 public:
  OutputSet(std::filesystem::path dir, std::string command, Json config);

  const Json& header() const noexcept { return header_; }

  void csv(const std::string& name, const std::string& column_header, const std::vector<std::string>& rows);
  void json(const std::string& name, const Json& body);
  void svg(const std::string& name, const std::string& document);
  /// Plain text (code files); the manifest goes into leading '#' lines.
  void text(const std::string& name, const std::string& content);

  void finish(bool complete, const std::string& status);

 private:
  void write(const std::string& name, const std::string& content);

  std::filesystem::path dir_;
  Json header_;
  std::vector<std::string> files_;
};

}  // namespace cli
