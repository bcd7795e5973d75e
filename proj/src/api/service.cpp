#include "eudrec/api/service.hpp"

#include <httplib.h>

#include <charconv>
#include <filesystem>

#include "eudrec/api/number_format.hpp"
#include "eudrec/error.hpp"
#include "eudrec/similarity/testbed.hpp"
#include "eudrec/text.hpp"

namespace eudrec::api {

using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

ApiResponse error(int status, const std::string& message, ojson extra = ojson::object()) {
  ojson body{{"error", message}};
  for (auto& [key, value] : extra.items()) body[key] = value;
  return {status, std::move(body)};
}

ApiResponse user_not_found(const std::string& username) {
  return error(404, "user not found", {{"username", username}});
}

std::optional<std::string> param(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

ojson record_json(const RuleRecord& r) {
  return ojson{{"triggerCategory", r.trigger_category},
               {"triggerEvent", r.trigger_event},
               {"actionCategory", r.action_category},
               {"actionEvent", r.action_event},
               {"description", r.description}};
}

}  // namespace

ojson recommendation_to_json(const Recommendation& rec) {
  ojson j{{"category", rec.category},
          {"direction", direction_name(rec.direction)},
          {"confidence", rec.confidence},
          {"support", rec.support},
          {"pairCount", rec.pair_count},
          {"inputCount", rec.input_count}};
  ojson examples = ojson::array();
  for (const auto& r : rec.example_rules) examples.push_back(record_json(r));
  j["exampleRules"] = std::move(examples);
  if (rec.explanation) {
    j["explanation"] = {{"level", explanation_level_name(rec.explanation->level)},
                        {"body", rec.explanation->body}};
  }
  return j;
}

ApiService::ApiService(ServiceConfig config, QuestionnaireBank questionnaires,
                       std::shared_ptr<UserRepository> users, TailoringPolicy policy)
    : config_(std::move(config)),
      questionnaires_(std::move(questionnaires)),
      users_(std::move(users)),
      policy_(std::make_shared<const TailoringPolicy>(std::move(policy))) {
  if (questionnaires_.empty()) {
    throw LoadError("no questionnaires loaded; refusing to start");
  }
  if (!users_) {
    throw ValidationError("ApiService needs a user repository");
  }
}

std::unique_ptr<ApiService> ApiService::create(const ServiceConfig& config) {
  QuestionnaireBank bank = load_questionnaires_file(config.questionnaires_path);
  TailoringPolicy policy = config.policy_path.empty()
                               ? TailoringPolicy::defaults()
                               : TailoringPolicy::load_file(config.policy_path);
  auto store = std::make_shared<FileStore>(config.data_dir);
  auto users = std::make_shared<UserRepository>(store, config.goals);
  auto service =
      std::make_unique<ApiService>(config, std::move(bank), std::move(users), std::move(policy));
  service->reload();
  return service;
}

std::shared_ptr<const TailoringPolicy> ApiService::policy() const {
  std::lock_guard lock(policy_mutex_);
  return policy_;
}

bool ApiService::reload() {
  if (!config_.policy_path.empty()) {
    auto fresh = std::make_shared<const TailoringPolicy>(TailoringPolicy::load_file(config_.policy_path));
    std::lock_guard lock(policy_mutex_);
    policy_ = std::move(fresh);
  }
  const fs::path rules = config_.effective_rules_dir() / RuleTable::kFileName;
  std::error_code ec;
  if (fs::is_regular_file(rules, ec)) {
    recommender_.publish(RuleTable::load(config_.effective_rules_dir()));
  }
  return recommender_.published();
}

ApiResponse ApiService::psychometrics_overview(const std::string& username) const {
  const auto profile = users_->find_profile(username);
  if (!profile) return user_not_found(username);
  const auto scores = users_->current_scores(*profile, config_.thresholds);
  ojson body = ojson::object();
  for (Trait trait : kSerializationOrder) {
    if (auto it = scores.find(trait); it != scores.end()) {
      body[std::string(trait_name(trait))] = it->second.label;
    }
  }
  body["username"] = profile->username;
  return {200, std::move(body)};
}

ApiResponse ApiService::psychometrics_values(const std::string& username) const {
  const auto profile = users_->find_profile(username);
  if (!profile) return user_not_found(username);
  ojson body = ojson::object();
  for (Trait trait : kSerializationOrder) {
    auto it = profile->trait_scores.find(trait);
    if (it == profile->trait_scores.end()) continue;
    const TraitThresholds t = users_->thresholds_for(trait, config_.thresholds);
    body[std::string(trait_name(trait))] = json_decimal3(it->second.value);
    body[std::string(range_field_name(trait))] = format_range(t.medium_low, t.medium_high);
  }
  body["username"] = profile->username;
  return {200, std::move(body)};
}

ApiResponse ApiService::submit_responses(std::string_view body_text) {
  ojson body;
  try {
    body = ojson::parse(body_text);
  } catch (const ojson::parse_error&) {
    return error(400, "request body is not valid JSON");
  }
  if (!body.is_object()) return error(400, "request body must be a JSON object");
  if (!body.contains("username") || !body["username"].is_string() ||
      is_blank(body["username"].get<std::string>())) {
    return error(400, "username is required");
  }
  if (!body.contains("trait") || !body["trait"].is_string()) {
    return error(400, "trait is required");
  }
  const std::string trait_token = body["trait"].get<std::string>();
  const auto trait = parse_trait(trait_token);
  if (!trait) return error(400, "unknown trait", {{"trait", trait_token}});
  const Questionnaire* questionnaire = questionnaires_.find(*trait);
  if (!questionnaire) return error(400, "no questionnaire loaded for trait", {{"trait", trait_token}});
  if (!body.contains("answers") || !body["answers"].is_object()) {
    return error(400, "answers must be an object of item id to integer");
  }

  ResponseSet responses;
  responses.username = body["username"].get<std::string>();
  responses.trait = *trait;
  responses.submitted_at = std::chrono::system_clock::now();
  for (const auto& [item_id, answer] : body["answers"].items()) {
    if (!answer.is_number_integer()) {
      return error(400, "answer for item " + item_id + " must be an integer", {{"item_id", item_id}});
    }
    const auto raw = answer.get<long long>();
    if (raw < std::numeric_limits<int>::min() || raw > std::numeric_limits<int>::max()) {
      return error(400, "answer for item " + item_id + " is out of range", {{"item_id", item_id}});
    }
    responses.answers[item_id] = static_cast<int>(raw);
  }

  try {
    const TraitThresholds thresholds = users_->thresholds_for(*trait, config_.thresholds);
    const TraitScore score = score_and_classify(*questionnaire, responses, thresholds);
    users_->record_trait_result(responses.username, *trait, responses, score);
    return {201, ojson{{"trait", trait_name(score.trait)},
                       {"value", json_decimal3(score.value)},
                       {"label", score.label}}};
  } catch (const ValidationError& e) {
    ojson extra = ojson::object();
    if (!e.subject().empty()) extra["item_id"] = e.subject();
    return error(400, e.what(), std::move(extra));
  }
}

ApiResponse ApiService::recommendations(const Params& params) const {
  const auto direction_token = param(params, "direction");
  if (!direction_token) return error(400, "direction is required (actions or triggers)");
  Direction direction;
  if (*direction_token == "actions") {
    direction = Direction::action_given_trigger;
  } else if (*direction_token == "triggers") {
    direction = Direction::trigger_given_action;
  } else {
    return error(400, "direction must be actions or triggers", {{"direction", *direction_token}});
  }
  const auto category = param(params, "category");
  if (!category || is_blank(*category)) return error(400, "category is required");
  std::size_t k = 5;
  if (auto k_token = param(params, "k")) {
    const auto [end, ec] = std::from_chars(k_token->data(), k_token->data() + k_token->size(), k);
    if (ec != std::errc{} || end != k_token->data() + k_token->size() || k == 0) {
      return error(400, "k must be a positive integer", {{"k", *k_token}});
    }
  }
  std::vector<Recommendation> recs;
  try {
    recs = recommender_.recommend(direction, *category, k);
  } catch (const UnavailableError& e) {
    return error(503, e.what());
  }
  if (auto username = param(params, "username"); username && !username->empty()) {
    recs = tailor(std::move(recs), *username, *users_, config_.thresholds, *policy());
  }
  ojson body = ojson::array();
  for (const auto& rec : recs) body.push_back(recommendation_to_json(rec));
  return {200, std::move(body)};
}

ApiResponse ApiService::similarity(const Params& params) const {
  const auto user_a = param(params, "userA");
  const auto user_b = param(params, "userB");
  const auto measure_token = param(params, "measure");
  const auto features = param(params, "features");
  if (!user_a || !user_b) return error(400, "userA and userB are required");
  if (!measure_token) return error(400, "measure is required");
  const auto measure = parse_measure(*measure_token);
  if (!measure) return error(400, "unknown measure", {{"measure", *measure_token}});
  if (!features || is_blank(*features)) return error(400, "features is required");

  const auto a = users_->find_profile(*user_a);
  if (!a) return user_not_found(*user_a);
  const auto b = users_->find_profile(*user_b);
  if (!b) return user_not_found(*user_b);
  try {
    const std::vector<UserProfile> context{*a, *b};
    const FeatureSelection selection = FeatureSelection::parse(*features, context);
    const double value = profile_similarity(*a, *b, *measure, selection);
    return {200, ojson{{"measure", measure_name(*measure)}, {"value", value}}};
  } catch (const ValidationError& e) {
    return error(400, e.what());
  } catch (const UndefinedSimilarityError& e) {
    return error(422, "undefined similarity", {{"reason", e.what()}});
  }
}

ApiResponse ApiService::questionnaire_list() const {
  ojson traits = ojson::array();
  for (const auto& [trait, q] : questionnaires_.all()) {
    traits.push_back({{"trait", trait_name(trait)}, {"items", q.items.size()}, {"scalePoints", q.scale_points}});
  }
  return {200, ojson{{"questionnaires", std::move(traits)}}};
}

ApiResponse ApiService::questionnaire(const std::string& trait_token) const {
  const auto trait = parse_trait(trait_token);
  const Questionnaire* q = trait ? questionnaires_.find(*trait) : nullptr;
  if (!q) return error(404, "questionnaire not found", {{"trait", trait_token}});
  ojson items = ojson::array();
  for (const auto& item : q->items) items.push_back({{"id", item.id}, {"text", item.text}});
  return {200, ojson{{"trait", trait_name(q->trait)}, {"scalePoints", q->scale_points},
                     {"items", std::move(items)}}};
}

ApiResponse ApiService::get_user(const std::string& username) const {
  const auto profile = users_->find_profile(username);
  if (!profile) return user_not_found(username);
  return {200, ojson::parse(profile_to_json(*profile).dump())};
}

ApiResponse ApiService::put_user(const std::string& username, std::string_view body_text) {
  nlohmann::json body;
  try {
    body = nlohmann::json::parse(body_text);
  } catch (const nlohmann::json::parse_error&) {
    return error(400, "request body is not valid JSON");
  }
  if (!body.is_object()) return error(400, "request body must be a JSON object");
  if (body.contains("username") && body["username"] != username) {
    return error(400, "username in body does not match the path", {{"username", username}});
  }
  body["username"] = username;
  try {
    UserProfile incoming = profile_from_json(body);
    // Trait scores are owned by questionnaire submissions; keep stored ones
    // unless the body sets them.
    if (!body.contains("traitScores")) {
      if (auto existing = users_->find_profile(username)) incoming.trait_scores = existing->trait_scores;
    }
    const UserProfile stored = users_->upsert_profile(std::move(incoming));
    return {200, ojson::parse(profile_to_json(stored).dump())};
  } catch (const ValidationError& e) {
    ojson extra = ojson::object();
    if (!e.subject().empty()) extra["field"] = e.subject();
    return error(400, e.what(), std::move(extra));
  }
}

void ApiService::mount(httplib::Server& server) {
  const auto send = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  const auto params_of = [](const httplib::Request& req) {
    return Params(req.params.begin(), req.params.end());
  };

  server.Get(R"(/api/empathy/userPsychometrics/([^/]+))",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               send(res, psychometrics_overview(req.matches[1]));
             });
  server.Get(R"(/api/empathy/userPsychometricsValues/([^/]+))",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               send(res, psychometrics_values(req.matches[1]));
             });
  server.Post("/api/empathy/responses",
              [this, send](const httplib::Request& req, httplib::Response& res) {
                send(res, submit_responses(req.body));
              });
  server.Get("/api/empathy/recommendations",
             [this, send, params_of](const httplib::Request& req, httplib::Response& res) {
               send(res, recommendations(params_of(req)));
             });
  server.Get("/api/empathy/similarity",
             [this, send, params_of](const httplib::Request& req, httplib::Response& res) {
               send(res, similarity(params_of(req)));
             });
  server.Get("/api/empathy/questionnaires",
             [this, send](const httplib::Request&, httplib::Response& res) {
               send(res, questionnaire_list());
             });
  server.Get(R"(/api/empathy/questionnaires/([^/]+))",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               send(res, questionnaire(req.matches[1]));
             });
  server.Get(R"(/api/empathy/users/([^/]+))",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               send(res, get_user(req.matches[1]));
             });
  server.Put(R"(/api/empathy/users/([^/]+))",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               send(res, put_user(req.matches[1], req.body));
             });

  if (config_.cors_enabled) {
    const std::string origin = config_.cors_origin;
    server.Options(R"(/api/empathy/.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });
    server.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
  }

  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      res.set_content(ojson{{"error", httplib::status_message(res.status)}}.dump(),
                      "application/json");
    }
  });
  server.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "internal error";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          what = e.what();
        } catch (...) {
        }
        res.status = 500;
        res.set_content(ojson{{"error", what}}.dump(), "application/json");
      });
}

ServiceHost::ServiceHost(ApiService& service) : server_(std::make_unique<httplib::Server>()) {
  // httplib's default also sets SO_REUSEPORT, which would let a second
  // instance silently share a busy port.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  service.mount(*server_);
}

ServiceHost::~ServiceHost() { stop(); }

int ServiceHost::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = server_->bind_to_any_port(host);
    if (bound < 0) throw IoError("cannot bind " + host + " on any port");
    return bound;
  }
  if (!server_->bind_to_port(host, port)) {
    throw IoError("cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void ServiceHost::run() { server_->listen_after_bind(); }

void ServiceHost::stop() {
  if (server_) server_->stop();
}

}  // namespace eudrec::api
