#include "eudrec/user_model/document_store.hpp"

#include <algorithm>
#include <mutex>

#include "eudrec/error.hpp"
#include "eudrec/text.hpp"

namespace eudrec {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kExtension = ".json";

void require_collection_name(std::string_view collection) {
  if (collection.empty() || escape_key(collection) != collection) {
    throw ValidationError("invalid collection name '" + std::string(collection) + "'");
  }
}

}  // namespace

std::vector<std::string> DocumentStore::keys_with_prefix(std::string_view collection,
                                                         std::string_view prefix) const {
  std::vector<std::string> out;
  for (auto& key : keys(collection)) {
    if (std::string_view(key).substr(0, prefix.size()) == prefix) {
      out.push_back(std::move(key));
    }
  }
  return out;
}

void MemoryStore::put(std::string_view collection, std::string_view key, const json& document) {
  std::unique_lock lock(mutex_);
  auto coll = data_.find(collection);
  if (coll == data_.end()) {
    coll = data_.emplace(std::string(collection), std::map<std::string, json, std::less<>>{}).first;
  }
  coll->second.insert_or_assign(std::string(key), document);
}

std::optional<json> MemoryStore::get(std::string_view collection, std::string_view key) const {
  std::shared_lock lock(mutex_);
  auto coll = data_.find(collection);
  if (coll == data_.end()) return std::nullopt;
  auto doc = coll->second.find(key);
  if (doc == coll->second.end()) return std::nullopt;
  return doc->second;
}

std::vector<std::string> MemoryStore::keys(std::string_view collection) const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  if (auto coll = data_.find(collection); coll != data_.end()) {
    for (const auto& [key, doc] : coll->second) out.push_back(key);
  }
  return out;
}

FileStore::FileStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec || !fs::is_directory(root_)) {
    throw IoError("cannot create store directory " + root_.string() + ": " + ec.message());
  }
}

fs::path FileStore::document_path(std::string_view collection, std::string_view key) const {
  require_collection_name(collection);
  return root_ / std::string(collection) / (escape_key(key) + std::string(kExtension));
}

void FileStore::put(std::string_view collection, std::string_view key, const json& document) {
  const fs::path path = document_path(collection, key);
  std::unique_lock lock(mutex_);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) {
    throw IoError("cannot create collection " + path.parent_path().string() + ": " + ec.message());
  }
  write_file_atomic(path, document.dump(2) + "\n");
}

std::optional<json> FileStore::get(std::string_view collection, std::string_view key) const {
  const fs::path path = document_path(collection, key);
  std::shared_lock lock(mutex_);
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    return std::nullopt;
  }
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw IoError("corrupt document " + path.string() + ": " + e.what());
  }
}

std::vector<std::string> FileStore::keys(std::string_view collection) const {
  require_collection_name(collection);
  const fs::path dir = root_ / std::string(collection);
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    return out;
  }
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || name.size() <= kExtension.size() ||
        name.compare(name.size() - kExtension.size(), kExtension.size(), kExtension) != 0) {
      continue;
    }
    out.push_back(unescape_key(std::string_view(name).substr(0, name.size() - kExtension.size())));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eudrec
