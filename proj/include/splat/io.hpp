#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "splat/optimize.hpp"
#include "splat/types.hpp"

namespace splat {

// Binary PPM (P6, maxval 255), channel bytes rounded half-up.
void write_ppm(const Image& img, const std::filesystem::path& path);
Image read_ppm(const std::filesystem::path& path);
std::vector<unsigned char> quantize_bytes(const Image& img);

nlohmann::json scene_to_json(const Scene& scene);
Scene scene_from_json(const nlohmann::json& j);
void save_scene(const Scene& scene, const std::filesystem::path& path);
Scene load_scene(const std::filesystem::path& path);

nlohmann::json camera_to_json(const CameraView& cam);
CameraView camera_from_json(const nlohmann::json& j);
void save_cameras(const std::vector<CameraView>& cams, const std::filesystem::path& path);
std::vector<CameraView> load_cameras(const std::filesystem::path& path);

void save_optimizer_state(const AdamState& state, const std::filesystem::path& path);
AdamState load_optimizer_state(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

// On-disk dataset: manifest.json, cameras.json, images/*.ppm, scene.json.
struct Dataset {
    std::filesystem::path root;
    std::map<std::string, CameraView> cameras;
    std::map<std::string, std::string> image_paths;  // view id -> relative path
    std::vector<std::string> train_ids, test_ids;    // each sorted

    Image load_image(const std::string& id) const;
    const CameraView& camera(const std::string& id) const;
    TrainSet train_views(const std::vector<std::string>& ids) const;
};

Dataset load_dataset(const std::filesystem::path& root);

}  // namespace splat
