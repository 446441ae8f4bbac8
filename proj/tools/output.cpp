#include "output.hpp"

#include <fstream>

namespace cli {

OutputSet::OutputSet(std::filesystem::path dir, std::string command, Json config) : dir_(std::move(dir)) {
  header_["schema"] = kManifestSchema;
  header_["generator"] = std::string("codedomain ") + CODEDOMAIN_VERSION;
  header_["command"] = std::move(command);
  header_["config"] = std::move(config);
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir_.string() + ": " + ec.message());
}

void OutputSet::write(const std::string& name, const std::string& content) {
  std::ofstream out(dir_ / name, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + (dir_ / name).string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write failed for " + (dir_ / name).string());
  files_.push_back(name);
}

void OutputSet::csv(const std::string& name, const std::string& column_header, const std::vector<std::string>& rows) {
  std::string s = "# manifest: " + header_.dump() + "\n" + column_header + "\n";
  for (const auto& r : rows) s += r + "\n";
  write(name, s);
}

void OutputSet::json(const std::string& name, const Json& body) {
  Json doc;
  doc["manifest"] = header_;
  for (const auto& [k, v] : body.items()) doc[k] = v;
  write(name, doc.dump(2) + "\n");
}

void OutputSet::svg(const std::string& name, const std::string& document) {
  // The manifest comment follows the XML declaration line.
  auto eol = document.find('\n');
  std::string manifest = header_.dump();
  // "--" may not appear inside an XML comment.
  for (std::size_t p = manifest.find("--"); p != std::string::npos; p = manifest.find("--", p)) manifest.replace(p, 2, "- -");
  write(name, document.substr(0, eol + 1) + "<!-- manifest: " + manifest + " -->\n" + document.substr(eol + 1));
}

void OutputSet::text(const std::string& name, const std::string& content) {
  write(name, "# manifest: " + header_.dump() + "\n" + content);
}

void OutputSet::finish(bool complete, const std::string& status) {
  Json m = header_;
  m["complete"] = complete;
  m["status"] = status;
  m["outputs"] = files_;
  std::ofstream out(dir_ / "manifest.json", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write manifest.json");
  out << m.dump(2) << "\n";
}

}  // namespace cli
