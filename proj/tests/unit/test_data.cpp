#include "dlinear/data.hpp"
#include "dlinear/error.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dlinear;
using namespace dlinear::data;
using Catch::Approx;
using testing_support::TempDir;
using testing_support::write_file;

TEST_CASE("load_csv parses a dated three-row file", "[data]") {
	TempDir dir("csv");
	write_file(dir.path() / "s.csv", "date,a,b\n2020-01-01 00:00:00,1,2\n2020-01-01 01:00:00,3,4\n2020-01-01 02:00:00,5,6.5\n");
	const auto s = load_csv(dir.path() / "s.csv");
	CHECK(s.length() == 3);
	CHECK(s.channels() == 2);
	CHECK(s.variate_names == std::vector<std::string>{"a", "b"});
	CHECK(s.timestamps.front() == "2020-01-01 00:00:00");
	CHECK(s.values(2, 1) == 6.5);
}

TEST_CASE("load_csv without a timestamp column keeps every column", "[data]") {
	TempDir dir("csv");
	write_file(dir.path() / "s.csv", "x,y\n1,2\n3,4\n");
	const auto s = load_csv(dir.path() / "s.csv");
	CHECK(s.channels() == 2);
	CHECK(s.values == Matrix::from_rows({{1, 2}, {3, 4}}));
}

TEST_CASE("load_csv honours a named timestamp column anywhere", "[data]") {
	TempDir dir("csv");
	write_file(dir.path() / "s.csv", "a,when,b\n1,10,2\n3,11,4\n");
	const auto s = load_csv(dir.path() / "s.csv", CsvSchema{"when"});
	CHECK(s.variate_names == std::vector<std::string>{"a", "b"});
	CHECK(s.timestamps == std::vector<std::string>{"10", "11"});
}

TEST_CASE("load_csv tolerates a byte order mark and CRLF", "[data]") {
	TempDir dir("csv");
	write_file(dir.path() / "s.csv", "\xEF\xBB\xBF" "date,a\r\n2020-01-01,1\r\n2020-01-02,2\r\n");
	const auto s = load_csv(dir.path() / "s.csv");
	CHECK(s.variate_names == std::vector<std::string>{"a"});
	CHECK(s.values(1, 0) == 2.0);
}

TEST_CASE("load_csv errors", "[data]") {
	TempDir dir("csv");
	SECTION("missing file is a configuration problem") {
		CHECK_THROWS_AS(load_csv(dir.path() / "nope.csv"), ConfigError);
	}
	SECTION("one data row is too few") {
		write_file(dir.path() / "s.csv", "a\n1\n");
		CHECK_THROWS_AS(load_csv(dir.path() / "s.csv"), DataError);
	}
	SECTION("bad cell names line and column") {
		write_file(dir.path() / "s.csv", "date,a,b\n2020-01-01,1,2\n2020-01-02,3,oops\n");
		try {
			load_csv(dir.path() / "s.csv");
			FAIL("expected DataError");
		} catch (const DataError &e) {
			const std::string msg = e.what();
			CHECK(msg.find("line 3") != std::string::npos);
			CHECK(msg.find("'b'") != std::string::npos);
		}
	}
	SECTION("ragged row") {
		write_file(dir.path() / "s.csv", "a,b\n1,2\n3\n");
		CHECK_THROWS_AS(load_csv(dir.path() / "s.csv"), DataError);
	}
	SECTION("non-finite value") {
		write_file(dir.path() / "s.csv", "a\n1\ninf\n");
		CHECK_THROWS_AS(load_csv(dir.path() / "s.csv"), DataError);
	}
	SECTION("decreasing timestamps") {
		write_file(dir.path() / "s.csv", "date,a\n2020-01-02,1\n2020-01-01,2\n");
		CHECK_THROWS_AS(load_csv(dir.path() / "s.csv"), DataError);
	}
}

TEST_CASE("write_csv round-trips values exactly", "[data]") {
	TempDir dir("csv");
	dlinear::Rng rng(3);
	const auto s = testing_support::make_series(testing_support::random_matrix(rng, 17, 3));
	write_csv(s, dir.path() / "out.csv");
	const auto back = load_csv(dir.path() / "out.csv");
	CHECK(back.values == s.values);
	CHECK(back.variate_names == s.variate_names);
	CHECK(back.timestamps == s.timestamps);
}

TEST_CASE("ratio split of ten rows is 7/1/2", "[data]") {
	const auto b = split_boundaries(10, SplitSpec::ratio(0.7, 0.1, 0.2));
	CHECK(b.train_end - b.train_begin == 7);
	CHECK(b.val_end - b.val_begin == 1);
	CHECK(b.test_end - b.test_begin == 2);
	CHECK(b.test_end == 10);
}

TEST_CASE("ratio split of a Traffic-length series", "[data]") {
	auto spec = SplitSpec::ratio(0.7, 0.1, 0.2);
	const auto b = split_boundaries(17544, spec);
	CHECK(b.train_end - b.train_begin == 12280);

	spec.train_truncate_steps = 8760;
	const auto t = split_boundaries(17544, spec);
	CHECK(t.train_end - t.train_begin == 8760);
	CHECK(t.train_end == 12280);
	CHECK(t.truncated_rows == 12280 - 8760);
	CHECK(t.val_begin == b.val_begin);
}

TEST_CASE("ETT calendar split sizes", "[data]") {
	const auto hourly = SplitSpec::ett_calendar(24);
	CHECK(hourly.train_steps == 8640);
	CHECK(hourly.val_steps == 2880);
	CHECK(hourly.test_steps == 2880);
	const auto minute = SplitSpec::ett_calendar(96);
	CHECK(minute.train_steps == 34560);
	CHECK(minute.val_steps == 11520);
	CHECK(minute.test_steps == 11520);

	const auto b = split_boundaries(17420, hourly);
	CHECK(b.test_end == 14400);
	CHECK(b.unused_tail == 17420 - 14400);
	CHECK_THROWS_AS(split_boundaries(14399, hourly), DataError);
}

TEST_CASE("split spec validation", "[data]") {
	CHECK_THROWS_AS(SplitSpec::ratio(0.7, 0.2, 0.2).validate(), ConfigError);
	CHECK_THROWS_AS(SplitSpec::ratio(1.0, 0.0, 0.0).validate(), ConfigError);
	auto spec = SplitSpec::ratio(0.7, 0.1, 0.2);
	spec.train_truncate_steps = 100;
	CHECK_THROWS_AS(split_boundaries(50, spec), DataError);
}

TEST_CASE("scaler on [0, 2] standardizes to [-1, 1]", "[data]") {
	const auto s = testing_support::make_series(Matrix::column({0.0, 2.0}));
	const auto scaler = fit_scaler(s);
	CHECK(scaler.means[0] == 1.0);
	CHECK(scaler.stds[0] == 1.0);
	const auto z = apply_scaler(s, scaler, Direction::forward);
	CHECK(z.values == Matrix::column({-1.0, 1.0}));
}

TEST_CASE("constant column standardizes to zeros", "[data]") {
	const auto s = testing_support::make_series(Matrix::column({5.0, 5.0, 5.0}));
	const auto scaler = fit_scaler(s);
	CHECK(scaler.stds[0] == 0.0);
	const auto z = apply_scaler(s, scaler, Direction::forward);
	CHECK(z.values == Matrix::column({0.0, 0.0, 0.0}));
	CHECK(apply_scaler(z, scaler, Direction::inverse).values == s.values);
}

TEST_CASE("scaler errors", "[data]") {
	CHECK_THROWS_AS(fit_scaler(testing_support::make_series(Matrix::column({1.0}))), DataError);
	const auto scaler = fit_scaler(testing_support::make_series(Matrix::column({1.0, 2.0})));
	CHECK_THROWS_AS(apply_scaler(testing_support::index_series(3, 2), scaler, Direction::forward), DataError);
}

TEST_CASE("windows over a standalone segment", "[data]") {
	const auto s = testing_support::index_series(10, 2);
	const auto w = make_windows(s, 3, 2);
	REQUIRE(w.size() == 6);
	CHECK(window_count(10, 0, 3, 2) == 6);
	for (std::size_t i = 0; i < w.size(); ++i) {
		const auto &p = w[i];
		CHECK(p.origin_index == i + 3);
		CHECK(p.input.rows() == 3);
		CHECK(p.target.rows() == 2);
		CHECK(p.input(0, 1) == 1000.0 + static_cast<double>(i));
		CHECK(p.target(1, 0) == static_cast<double>(i + 4));
	}
}

TEST_CASE("too short segment names L, T and length", "[data]") {
	const auto s = testing_support::index_series(5, 1);
	try {
		make_windows(s, 5, 1);
		FAIL("expected DataError");
	} catch (const DataError &e) {
		const std::string msg = e.what();
		CHECK(msg.find("L=5") != std::string::npos);
		CHECK(msg.find("T=1") != std::string::npos);
		CHECK(msg.find("5 rows") != std::string::npos);
	}
	CHECK(window_count(5, 0, 5, 1) == 0);
}

TEST_CASE("context lets test windows start at the first segment row", "[data]") {
	const auto full = testing_support::index_series(20, 1);
	const auto context = slice(full, 10, 16);
	const auto segment = slice(full, 16, 20);
	const auto w = make_windows(segment, &context, 3, 2);
	REQUIRE(w.size() == 3);
	CHECK(window_count(4, 6, 3, 2) == 3);
	for (std::size_t i = 0; i < 3; ++i) {
		CHECK(w[i].origin_index == i);
		CHECK(w[i].target(0, 0) == static_cast<double>(16 + i));
		CHECK(w[i].input(2, 0) == static_cast<double>(15 + i));
	}
}

TEST_CASE("short context limits the reachable origins", "[data]") {
	const auto full = testing_support::index_series(20, 1);
	const auto context = slice(full, 14, 16);
	const auto w = make_windows(slice(full, 16, 20), &context, 3, 1);
	CHECK(w.size() == 3);
	CHECK(window_count(4, 2, 3, 1) == 3);
	CHECK(w[0].target(0, 0) == 17.0);
}

TEST_CASE("window views outlive the segment they were built from", "[data]") {
	WindowSet kept;
	{
		const auto s = testing_support::index_series(12, 1);
		kept = make_windows(s, 4, 2);
	}
	const auto copy = kept;
	CHECK(copy[0].input(0, 0) == 0.0);
	CHECK(copy[copy.size() - 1].target(1, 0) == 11.0);
}

TEST_CASE("split and scaler serialize to JSON", "[data]") {
	auto spec = SplitSpec::ratio(0.7, 0.1, 0.2);
	spec.train_truncate_steps = 4;
	const auto series = testing_support::index_series(20, 2);
	const auto parts = split(series, spec);
	CHECK(parts.train.length() == 4);
	const auto scaler = fit_scaler(parts.train);
	const auto doc = to_json(spec, parts.boundaries, scaler);
	CHECK(doc.at("mode") == "ratio");
	for (const char *key : {"boundaries", "means", "stds", "epsilon"}) {
		CHECK(doc.contains(key));
	}
	const auto back = scaler_from_json(doc);
	CHECK(back.means == scaler.means);
	CHECK(back.stds == scaler.stds);
	const auto b = boundaries_from_json(doc);
	CHECK(b.train_begin == parts.boundaries.train_begin);
	CHECK(b.test_end == parts.boundaries.test_end);
	CHECK(split_mode_from_string(to_string(SplitMode::ett_calendar)) == SplitMode::ett_calendar);
}
