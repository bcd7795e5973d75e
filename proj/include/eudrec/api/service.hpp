#pragma once

#include <json.hpp>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "eudrec/api/config.hpp"
#include "eudrec/psychometrics/questionnaire.hpp"
#include "eudrec/recommender/recommender.hpp"
#include "eudrec/user_model/repository.hpp"

namespace httplib {
class Server;
}

namespace eudrec::api {

using Params = std::multimap<std::string, std::string>;

struct ApiResponse {
  int status = 200;
  nlohmann::ordered_json body;
};

/// Request handlers for the user-model and recommendation endpoints, free of
/// any HTTP plumbing so they can be exercised directly. mount() wires them
/// onto an httplib server:
///
///   GET  /api/empathy/userPsychometrics/{username}
///   GET  /api/empathy/userPsychometricsValues/{username}
///   POST /api/empathy/responses
///   GET  /api/empathy/recommendations?direction=&category=&k=&username=
///   GET  /api/empathy/similarity?userA=&userB=&measure=&features=
///   GET  /api/empathy/questionnaires[/{trait}]
///   GET  /api/empathy/users/{username}, PUT /api/empathy/users/{username}
///
/// Every error body is a JSON object with an "error" field.
class ApiService {
 public:
  ApiService(ServiceConfig config, QuestionnaireBank questionnaires,
             std::shared_ptr<UserRepository> users, TailoringPolicy policy);

  /// Loads questionnaires, policy, the file-backed store and, when present,
  /// the published rule table. Throws LoadError when no questionnaire loads.
  static std::unique_ptr<ApiService> create(const ServiceConfig& config);

  ApiResponse psychometrics_overview(const std::string& username) const;
  ApiResponse psychometrics_values(const std::string& username) const;
  ApiResponse submit_responses(std::string_view body);
  ApiResponse recommendations(const Params& params) const;
  ApiResponse similarity(const Params& params) const;
  ApiResponse questionnaire_list() const;
  ApiResponse questionnaire(const std::string& trait) const;
  ApiResponse get_user(const std::string& username) const;
  ApiResponse put_user(const std::string& username, std::string_view body);

  /// Re-reads the policy file (if configured) and the rule table (if one
  /// has been written). Returns whether a rule table is published.
  bool reload();

  void publish_rules(const RuleTable& table) { recommender_.publish(table); }

  void mount(httplib::Server& server);

  const ServiceConfig& config() const { return config_; }
  UserRepository& users() { return *users_; }
  const Recommender& recommender() const { return recommender_; }

 private:
  std::shared_ptr<const TailoringPolicy> policy() const;

  ServiceConfig config_;
  QuestionnaireBank questionnaires_;
  std::shared_ptr<UserRepository> users_;
  mutable std::mutex policy_mutex_;
  std::shared_ptr<const TailoringPolicy> policy_;
  Recommender recommender_;
};

/// Owns the HTTP server for an ApiService.
class ServiceHost {
 public:
  explicit ServiceHost(ApiService& service);
  ~ServiceHost();
  ServiceHost(const ServiceHost&) = delete;
  ServiceHost& operator=(const ServiceHost&) = delete;

  /// Binds the listening socket; port 0 picks a free port. Returns the bound
  /// port. Throws IoError when the address is unavailable.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  void run();
  void stop();

 private:
  std::unique_ptr<httplib::Server> server_;
};

nlohmann::ordered_json recommendation_to_json(const Recommendation& rec);

}  // namespace eudrec::api
