#include "dlinear/metrics.hpp"

#include "dlinear/error.hpp"

#include <cmath>

namespace dlinear::metrics {

EvalSummary evaluate(const ForecastFn &forecast, std::span<const data::WindowPair> windows) {
	if (windows.empty()) {
		throw DataError("cannot evaluate on an empty window set");
	}
	double sq_sum = 0.0;
	double abs_sum = 0.0;
	std::uint64_t count = 0;
	for (std::size_t w = 0; w < windows.size(); ++w) {
		const auto &pair = windows[w];
		const Matrix pred = forecast(pair.input);
		if (pred.rows() != pair.target.rows() || pred.cols() != pair.target.cols()) {
			throw DataError("forecast shape " + std::to_string(pred.rows()) + "x" + std::to_string(pred.cols()) +
			                " does not match target " + std::to_string(pair.target.rows()) + "x" +
			                std::to_string(pair.target.cols()));
		}
		for (std::size_t t = 0; t < pred.rows(); ++t) {
			for (std::size_t c = 0; c < pred.cols(); ++c) {
				const double r = pred(t, c) - pair.target(t, c);
				sq_sum += r * r;
				abs_sum += std::abs(r);
			}
		}
		count += pred.size();
		if (!std::isfinite(sq_sum)) {
			throw NumericalError("non-finite forecast error at evaluation window " + std::to_string(w));
		}
	}

	EvalSummary summary;
	summary.mse = sq_sum / static_cast<double>(count);
	summary.mae = abs_sum / static_cast<double>(count);
	summary.n_windows = windows.size();
	summary.n_elements = count;
	summary.L = windows.front().input.rows();
	summary.T = windows.front().target.rows();
	summary.C = windows.front().target.cols();
	return summary;
}

EvalSummary combine(std::span<const EvalSummary> parts) {
	if (parts.empty()) {
		throw DataError("cannot combine zero summaries");
	}
	EvalSummary out = parts.front();
	double sq_sum = 0.0;
	double abs_sum = 0.0;
	out.n_windows = 0;
	out.n_elements = 0;
	for (const auto &p : parts) {
		sq_sum += p.mse * static_cast<double>(p.n_elements);
		abs_sum += p.mae * static_cast<double>(p.n_elements);
		out.n_windows += p.n_windows;
		out.n_elements += p.n_elements;
	}
	out.mse = sq_sum / static_cast<double>(out.n_elements);
	out.mae = abs_sum / static_cast<double>(out.n_elements);
	return out;
}

nlohmann::json to_json(const EvalSummary &s) {
	return {{"dataset_id", s.dataset_id}, {"model_id", s.model_id}, {"L", s.L},
	        {"T", s.T},                   {"C", s.C},               {"mse", s.mse},
	        {"mae", s.mae},               {"n_windows", s.n_windows}, {"n_elements", s.n_elements}};
}

EvalSummary summary_from_json(const nlohmann::json &doc) {
	try {
		EvalSummary s;
		s.dataset_id = doc.at("dataset_id").get<std::string>();
		s.model_id = doc.at("model_id").get<std::string>();
		s.L = doc.at("L").get<std::size_t>();
		s.T = doc.at("T").get<std::size_t>();
		s.C = doc.at("C").get<std::size_t>();
		s.mse = doc.at("mse").get<double>();
		s.mae = doc.at("mae").get<double>();
		s.n_windows = doc.at("n_windows").get<std::size_t>();
		s.n_elements = doc.at("n_elements").get<std::uint64_t>();
		return s;
	} catch (const nlohmann::json::exception &e) {
		throw ConfigError(std::string("malformed summary document: ") + e.what());
	}
}

std::string to_json_line(const EvalSummary &summary) {
	return to_json(summary).dump();
}

} // namespace dlinear::metrics
