#include "eudrec/psychometrics/questionnaire.hpp"

#include <json.hpp>
#include <set>

#include "eudrec/error.hpp"

namespace eudrec {
namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view source, const std::string& where, const std::string& what) {
  throw LoadError(std::string(source) + ": " + where + ": " + what);
}

const json& require_field(const json& obj, const char* key, std::string_view source,
                          const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    fail(source, where, std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

std::string require_string(const json& obj, const char* key, std::string_view source,
                           const std::string& where) {
  const json& v = require_field(obj, key, source, where);
  if (!v.is_string()) {
    fail(source, where + "." + key, "expected a string");
  }
  return v.get<std::string>();
}

Keying parse_keying(const std::string& token, std::string_view source, const std::string& where) {
  if (token == "positive" || token == "+") return Keying::positive;
  if (token == "negative" || token == "-") return Keying::negative;
  fail(source, where, "invalid keying token '" + token + "'");
}

}  // namespace

void Questionnaire::validate() const {
  if (scale_points < 2) {
    throw ValidationError("scale_points must be at least 2 for " + std::string(trait_name(trait)));
  }
  std::set<std::string_view> seen;
  for (const auto& item : items) {
    if (item.id.empty()) {
      throw ValidationError("empty item id in " + std::string(trait_name(trait)));
    }
    if (!seen.insert(item.id).second) {
      throw ValidationError("duplicate item id " + item.id, item.id);
    }
  }
}

const QuestionnaireItem* Questionnaire::find_item(std::string_view id) const {
  for (const auto& item : items) {
    if (item.id == id) return &item;
  }
  return nullptr;
}

void QuestionnaireBank::add(Questionnaire q) {
  q.validate();
  const Trait trait = q.trait;
  if (!by_trait_.emplace(trait, std::move(q)).second) {
    throw ValidationError("duplicate questionnaire for " + std::string(trait_name(trait)));
  }
}

const Questionnaire* QuestionnaireBank::find(Trait trait) const {
  auto it = by_trait_.find(trait);
  return it == by_trait_.end() ? nullptr : &it->second;
}

QuestionnaireBank load_questionnaires(std::string_view document, std::string_view source) {
  QuestionnaireBank bank;
  if (is_blank(document)) {
    return bank;
  }
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    fail(source, "$", std::string("parse error: ") + e.what());
  }
  if (!root.is_object()) {
    fail(source, "$", "expected an object");
  }
  if (!root.contains("questionnaires")) {
    if (root.empty()) return bank;
    fail(source, "$", "missing field 'questionnaires'");
  }
  const json& blocks = root.at("questionnaires");
  if (!blocks.is_array()) {
    fail(source, "$.questionnaires", "expected an array");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string where = "$.questionnaires[" + std::to_string(i) + "]";
    const json& block = blocks[i];
    const std::string trait_token = require_string(block, "trait", source, where);
    const auto trait = parse_trait(trait_token);
    if (!trait) {
      fail(source, where + ".trait", "unknown trait '" + trait_token + "'");
    }
    if (bank.find(*trait) != nullptr) {
      fail(source, where + ".trait", "duplicate trait '" + trait_token + "'");
    }
    Questionnaire q;
    q.trait = *trait;
    if (block.contains("scale_points")) {
      const json& sp = block.at("scale_points");
      if (!sp.is_number_integer()) {
        fail(source, where + ".scale_points", "expected an integer");
      }
      q.scale_points = sp.get<int>();
    }
    const json& items = require_field(block, "items", source, where);
    if (!items.is_array()) {
      fail(source, where + ".items", "expected an array");
    }
    for (std::size_t j = 0; j < items.size(); ++j) {
      const std::string item_where = where + ".items[" + std::to_string(j) + "]";
      QuestionnaireItem item;
      item.id = require_string(items[j], "id", source, item_where);
      item.text = require_string(items[j], "text", source, item_where);
      item.keying =
          parse_keying(require_string(items[j], "keying", source, item_where), source,
                       item_where + ".keying");
      q.items.push_back(std::move(item));
    }
    try {
      bank.add(std::move(q));
    } catch (const ValidationError& e) {
      fail(source, where, e.what());
    }
  }
  return bank;
}

QuestionnaireBank load_questionnaires_file(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError& e) {
    throw LoadError(e.what());
  }
  return load_questionnaires(text, path.string());
}

}  // namespace eudrec
