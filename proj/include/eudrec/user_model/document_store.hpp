#pragma once

#include <filesystem>
#include <json.hpp>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace eudrec {

/// Collections of JSON documents addressed by string keys. Implementations
/// are safe for concurrent use; a single put/get is atomic.
class DocumentStore {
 public:
  virtual ~DocumentStore() = default;

  virtual void put(std::string_view collection, std::string_view key,
                   const nlohmann::json& document) = 0;
  virtual std::optional<nlohmann::json> get(std::string_view collection,
                                            std::string_view key) const = 0;
  /// All keys of `collection` in ascending byte order.
  virtual std::vector<std::string> keys(std::string_view collection) const = 0;
  /// Keys starting with `prefix`, ascending.
  std::vector<std::string> keys_with_prefix(std::string_view collection,
                                            std::string_view prefix) const;
  virtual void flush() {}
};

class MemoryStore final : public DocumentStore {
 public:
  void put(std::string_view collection, std::string_view key,
           const nlohmann::json& document) override;
  std::optional<nlohmann::json> get(std::string_view collection,
                                    std::string_view key) const override;
  std::vector<std::string> keys(std::string_view collection) const override;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::map<std::string, nlohmann::json, std::less<>>, std::less<>> data_;
};

/// One directory per collection under `root`, one `<escaped key>.json` file
/// per document. Writes go through a temporary file and a rename.
class FileStore final : public DocumentStore {
 public:
  /// Creates `root` if needed; throws IoError when it cannot.
  explicit FileStore(std::filesystem::path root);

  void put(std::string_view collection, std::string_view key,
           const nlohmann::json& document) override;
  std::optional<nlohmann::json> get(std::string_view collection,
                                    std::string_view key) const override;
  std::vector<std::string> keys(std::string_view collection) const override;

  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path document_path(std::string_view collection, std::string_view key) const;

  std::filesystem::path root_;
  mutable std::shared_mutex mutex_;
};

}  // namespace eudrec
