#include "charfactor/certificate_io.hpp"

#include <stdexcept>

namespace charfactor {

nlohmann::json certificate_to_json(const FactorizationCertificate& cert) {
    nlohmann::json j;
    j["m"] = cert.m;
    j["n"] = cert.n;
    j["lambda"] = cert.lambda.entries();
    j["balanced"] = cert.balanced;
    j["mu"] = cert.mu ? nlohmann::json(cert.mu->entries()) : nlohmann::json(nullptr);
    j["w0_sign"] = cert.w0_sign ? nlohmann::json(*cert.w0_sign) : nlohmann::json(nullptr);
    nlohmann::json etas = nlohmann::json::array();
    for (const auto& eta : cert.etas) etas.push_back(eta.entries());
    j["etas"] = std::move(etas);
    j["epsilon"] = cert.epsilon ? nlohmann::json(*cert.epsilon) : nlohmann::json(nullptr);
    return j;
}

FactorizationCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        FactorizationCertificate cert;
        cert.m = j.at("m").get<int>();
        cert.n = j.at("n").get<int>();
        cert.lambda = WeightVector(j.at("lambda").get<std::vector<int>>());
        cert.balanced = j.at("balanced").get<bool>();
        if (cert.m < 1 || cert.n < 1 || cert.lambda.size() != cert.m * cert.n)
            throw std::invalid_argument("certificate: lambda must have m*n entries");
        if (!j.at("mu").is_null()) cert.mu = StrictVector(j.at("mu").get<std::vector<int>>());
        if (!j.at("w0_sign").is_null()) cert.w0_sign = j.at("w0_sign").get<int>();
        for (const auto& eta : j.at("etas")) {
            cert.etas.emplace_back(eta.get<std::vector<int>>());
            if (cert.etas.back().size() != cert.m) throw std::invalid_argument("certificate: eta must have m entries");
        }
        if (!j.at("epsilon").is_null()) cert.epsilon = j.at("epsilon").get<int>();
        if (cert.balanced && (!cert.mu || !cert.w0_sign || !cert.epsilon || static_cast<int>(cert.etas.size()) != cert.n))
            throw std::invalid_argument("certificate: balanced certificate is missing fields");
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate: ") + e.what());
    }
}

}  // namespace charfactor
