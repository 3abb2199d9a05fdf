// Copyright 2026 The subvar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBVAR_PARALLEL_HPP_
#define SUBVAR_PARALLEL_HPP_

#include <condition_variable>
#include <exception>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace subvar {

/// Worker count for a request of `requested` (0 = hardware concurrency),
/// capped by the SUBVAR_THREADS environment variable when it is set to a
/// positive value.
std::size_t resolve_worker_count(std::size_t requested);

/// Fixed-size pool that runs static chunks of an index range; the calling
/// thread takes the first chunk. parallel_for returns once every chunk is done.
class WorkerPool {
 public:
  explicit WorkerPool(std::size_t workers);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  std::size_t size() const { return threads_.size() + 1; }

  using RangeBody = std::function<void(std::size_t begin, std::size_t end)>;
  void parallel_for(std::size_t count, const RangeBody& body);

 private:
  void worker_loop(std::size_t worker);

  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  const RangeBody* body_ = nullptr;
  std::size_t count_ = 0;
  std::size_t generation_ = 0;
  std::size_t pending_ = 0;
  bool stopping_ = false;
  std::exception_ptr error_;
};

}  // namespace subvar

#endif  // SUBVAR_PARALLEL_HPP_
