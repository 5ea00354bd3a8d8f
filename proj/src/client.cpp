#include "apichain/client.hpp"

#include "httplib.h"

using json = nlohmann::json;

namespace apichain {

HttpApiClient::HttpApiClient(std::string host, int port) : host_(std::move(host)), port_(port) {}

json HttpApiClient::call(const std::string& api, const std::map<std::string, json>& params) {
    httplib::Client cli(host_, port_);
    cli.set_connection_timeout(5);
    cli.set_read_timeout(15);
    httplib::Params query;
    for (const auto& [key, value] : params) {
        if (value.is_string()) {
            query.emplace(key, value.get<std::string>());
        } else {
            query.emplace(key, value.dump());
        }
    }
    auto res = cli.Get(("/api/" + api).c_str(), query, httplib::Headers{});
    if (!res) {
        throw ApiError(ApiErrorCode::Transport,
                       "transport failure calling " + api + ": " + httplib::to_string(res.error()));
    }
    json body;
    try {
        body = json::parse(res->body);
    } catch (const json::parse_error&) {
        throw ApiError(ApiErrorCode::Transport, "malformed response body from " + api);
    }
    if (body.value("ok", false)) return body.at("data");
    const auto& err = body.value("error", json::object());
    const std::string code = err.value("code", "TRANSPORT");
    const std::string message = err.value("message", "request failed");
    if (code == "NOT_FOUND") throw ApiError(ApiErrorCode::NotFound, message);
    if (code == "BAD_REQUEST") throw ApiError(ApiErrorCode::BadRequest, message);
    throw ApiError(ApiErrorCode::Transport, message);
}

}  // namespace apichain
