#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace apichain {

enum class ApiErrorCode { NotFound, BadRequest, Transport };

const char* api_error_code_name(ApiErrorCode code);

struct ApiError : std::runtime_error {
    ApiErrorCode code;
    ApiError(ApiErrorCode c, const std::string& message)
        : std::runtime_error(message), code(c) {}
};

/// Transport-agnostic API access used by the plan interpreter. Implementations
/// must tolerate concurrent callers.
class ApiClient {
public:
    virtual ~ApiClient() = default;
    /// Returns the API's data payload, or throws ApiError.
    virtual nlohmann::json call(const std::string& api,
                                const std::map<std::string, nlohmann::json>& params) = 0;
};

/// Calls a served corpus over HTTP (GET /api/<name>). A fresh connection per
/// request keeps the client trivially safe under concurrency.
class HttpApiClient : public ApiClient {
public:
    HttpApiClient(std::string host, int port);

    nlohmann::json call(const std::string& api,
                        const std::map<std::string, nlohmann::json>& params) override;

private:
    std::string host_;
    int port_;
};

}  // namespace apichain
