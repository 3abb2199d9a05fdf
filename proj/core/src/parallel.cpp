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

#include "subvar/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace subvar {

std::size_t resolve_worker_count(std::size_t requested) {
  std::size_t workers = requested;
  if (workers == 0) workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("SUBVAR_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(cap, &end, 10);
    if (end != cap && value > 0) workers = std::min(workers, static_cast<std::size_t>(value));
  }
  return workers;
}

WorkerPool::WorkerPool(std::size_t workers) {
  const std::size_t extra = workers > 1 ? workers - 1 : 0;
  threads_.reserve(extra);
  for (std::size_t w = 0; w < extra; ++w) threads_.emplace_back([this, w] { worker_loop(w + 1); });
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    stopping_ = true;
  }
  wake_.notify_all();
  for (auto& t : threads_) t.join();
}

namespace {

std::pair<std::size_t, std::size_t> chunk(std::size_t count, std::size_t parts, std::size_t k) {
  return {count * k / parts, count * (k + 1) / parts};
}

}  // namespace

void WorkerPool::parallel_for(std::size_t count, const RangeBody& body) {
  if (threads_.empty() || count < 2) {
    if (count > 0) body(0, count);
    return;
  }
  {
    std::lock_guard<std::mutex> lock(mutex_);
    body_ = &body;
    count_ = count;
    pending_ = threads_.size();
    error_ = nullptr;
    ++generation_;
  }
  wake_.notify_all();
  std::exception_ptr local;
  try {
    const auto [begin, end] = chunk(count, size(), 0);
    if (begin < end) body(begin, end);
  } catch (...) {
    local = std::current_exception();
  }
  std::unique_lock<std::mutex> lock(mutex_);
  done_.wait(lock, [this] { return pending_ == 0; });
  body_ = nullptr;
  if (!local) local = error_;
  if (local) std::rethrow_exception(local);
}

void WorkerPool::worker_loop(std::size_t worker) {
  std::size_t seen = 0;
  for (;;) {
    const RangeBody* body = nullptr;
    std::size_t count = 0;
    {
      std::unique_lock<std::mutex> lock(mutex_);
      wake_.wait(lock, [&] { return stopping_ || generation_ != seen; });
      if (stopping_) return;
      seen = generation_;
      body = body_;
      count = count_;
    }
    std::exception_ptr failure;
    try {
      const auto [begin, end] = chunk(count, size(), worker);
      if (begin < end) (*body)(begin, end);
    } catch (...) {
      failure = std::current_exception();
    }
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (failure && !error_) error_ = failure;
      if (--pending_ == 0) done_.notify_one();
    }
  }
}

}  // namespace subvar
