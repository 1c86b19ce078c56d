#pragma once

#include <json.hpp>

#include "lvint/analyzer.hpp"
#include "lvint/aplica.hpp"
#include "lvint/lv_structure.hpp"
#include "lvint/normal_form.hpp"

namespace lvint {

// Field files: {"P": "<poly text>", "Q": "<poly text>"}.
PlanarField field_from_json(const nlohmann::json& j);
nlohmann::json field_to_json(const PlanarField& f);

nlohmann::json to_json(const LVData& lv);
nlohmann::json to_json(const Obstruction& o);
nlohmann::json to_json(const FirstIntegralCertificate& c);
nlohmann::json to_json(const IIFCertificate& c);
nlohmann::json to_json(const InvariantCurveCertificate& c);
nlohmann::json to_json(const ClassificationVerdict& v);
nlohmann::json to_json(const NormalFormReport& r);
nlohmann::json to_json(const AplicaParams& p);
nlohmann::json to_json(const SweepReport& r);

}  // namespace lvint
