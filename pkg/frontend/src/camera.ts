// Orbit camera around the model's bounding-sphere center.

import {
  add,
  invert,
  lookAt,
  multiply,
  normalize,
  perspective,
  scale,
  sub,
  transformPoint,
  type Mat4,
  type Vec3,
} from "./math.js";

export class OrbitCamera {
  target: Vec3 = [0, 0, 0];
  distance = 5;
  yaw = Math.PI / 4;
  pitch = Math.PI / 6;
  fovY = (45 * Math.PI) / 180;
  near = 0.01;
  far = 1000;

  frame(center: Vec3, radius: number): void {
    this.target = center;
    this.distance = radius * 2.8;
    this.near = Math.max(radius / 1000, 1e-4);
    this.far = radius * 100;
  }

  get eye(): Vec3 {
    const cp = Math.cos(this.pitch);
    const offset: Vec3 = [
      cp * Math.sin(this.yaw),
      Math.sin(this.pitch),
      cp * Math.cos(this.yaw),
    ];
    return add(this.target, scale(offset, this.distance));
  }

  rotate(dx: number, dy: number): void {
    this.yaw -= dx * 0.01;
    this.pitch = Math.min(1.5, Math.max(-1.5, this.pitch + dy * 0.01));
  }

  zoom(factor: number): void {
    this.distance = Math.max(this.near * 10, this.distance * factor);
  }

  viewMatrix(): Mat4 {
    return lookAt(this.eye, this.target, [0, 1, 0]);
  }

  viewProjection(aspect: number): Mat4 {
    return multiply(perspective(this.fovY, aspect, this.near, this.far), this.viewMatrix());
  }

  /** Ray through a canvas pixel, in world space. */
  rayFromScreen(
    x: number,
    y: number,
    width: number,
    height: number,
  ): { origin: Vec3; dir: Vec3 } {
    const ndcX = (2 * x) / width - 1;
    const ndcY = 1 - (2 * y) / height;
    const inverse = invert(this.viewProjection(width / height));
    const nearPoint = transformPoint(inverse, [ndcX, ndcY, -1]);
    const farPoint = transformPoint(inverse, [ndcX, ndcY, 1]);
    return { origin: this.eye, dir: normalize(sub(farPoint, nearPoint)) };
  }
}
