#pragma once

#include "apichain/client.hpp"
#include "apichain/corpus.hpp"

#include <memory>
#include <thread>

namespace apichain {

/// Evaluate one API call against a corpus. Read-only; identical (api, params)
/// always produce identical payloads. Throws ApiError with NotFound or
/// BadRequest.
nlohmann::json query_endpoint(const Corpus& corpus, const std::string& api,
                              const std::map<std::string, nlohmann::json>& params);

/// In-process client over a corpus; shares query_endpoint semantics with the
/// HTTP service byte for byte.
class LocalClient : public ApiClient {
public:
    explicit LocalClient(const Corpus& corpus) : corpus_(corpus) {}

    nlohmann::json call(const std::string& api,
                        const std::map<std::string, nlohmann::json>& params) override {
        return query_endpoint(corpus_, api, params);
    }

private:
    const Corpus& corpus_;
};

/// HTTP front end: GET /api/<apiName> with query parameters named exactly as
/// registry inputs. Responses envelope the payload as {"ok":true,"data":...}
/// or {"ok":false,"error":{"code","message"}}.
class ScholarlyService {
public:
    explicit ScholarlyService(const Corpus& corpus);
    ~ScholarlyService();

    ScholarlyService(const ScholarlyService&) = delete;
    ScholarlyService& operator=(const ScholarlyService&) = delete;

    /// Bind and serve on a background thread. port 0 picks a free port.
    /// Returns the bound port.
    int start(const std::string& host = "127.0.0.1", int port = 0);
    void stop();

    int port() const { return port_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::thread thread_;
    int port_ = 0;
};

}  // namespace apichain
